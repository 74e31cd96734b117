//! Tokenizer shared by the Turtle subset and the query language.

use super::ParseDiagnostic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    /// `<...>`, contents only.
    IriRef(String),
    /// `prefix:local`; `local` may be empty.
    PName { prefix: String, local: String },
    /// `?name` or `$name`.
    Var(String),
    /// Bare word: `a`, `SELECT`, `PREFIX`, `true`, ...
    Word(String),
    /// `@prefix`, `@base`, ...
    Directive(String),
    Literal { text: String, lang: Option<String> },
    Number(String),
    BlankNode(String),
    DoubleCaret,
    Punct(char),
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::IriRef(s) => format!("<{s}>"),
            Tok::PName { prefix, local } => format!("{prefix}:{local}"),
            Tok::Var(v) => format!("?{v}"),
            Tok::Word(w) => format!("`{w}`"),
            Tok::Directive(d) => format!("@{d}"),
            Tok::Literal { .. } => "string literal".into(),
            Tok::Number(n) => format!("number {n}"),
            Tok::BlankNode(b) => format!("_:{b}"),
            Tok::DoubleCaret => "`^^`".into(),
            Tok::Punct(c) => format!("`{c}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')
}

impl<'a> Lexer<'a> {
    pub fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseDiagnostic> {
        let mut lexer = Lexer::new(text);
        let mut out = Vec::new();
        while let Some(tok) = lexer.next_token()? {
            out.push(tok);
        }
        Ok(out)
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    pub fn next_token(&mut self) -> Result<Option<Token>, ParseDiagnostic> {
        self.skip_trivia();
        let pos = self.pos();
        let Some(c) = self.peek() else {
            return Ok(None);
        };
        let tok = match c {
            '<' => {
                self.bump();
                let body = self.take_while(|c| c != '>' && c != '\n' && !c.is_whitespace());
                if self.peek() != Some('>') {
                    return Err(ParseDiagnostic::error(pos, "unterminated IRI reference"));
                }
                self.bump();
                Tok::IriRef(body)
            }
            '"' => self.string(pos)?,
            '?' | '$' => {
                self.bump();
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if name.is_empty() {
                    Tok::Punct(c)
                } else {
                    Tok::Var(name)
                }
            }
            '@' => {
                self.bump();
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
                if name.is_empty() {
                    return Err(ParseDiagnostic::error(pos, "expected a name after `@`"));
                }
                Tok::Directive(name)
            }
            '^' => {
                self.bump();
                if self.peek() == Some('^') {
                    self.bump();
                    Tok::DoubleCaret
                } else {
                    Tok::Punct('^')
                }
            }
            '_' if self.is_blank_node_start() => {
                self.bump();
                self.bump();
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_' || c == '-');
                Tok::BlankNode(name)
            }
            c if c.is_ascii_digit() || ((c == '+' || c == '-') && self.next_is_digit()) => {
                self.bump();
                let mut n = c.to_string();
                n.push_str(&self.take_name(|c| c.is_ascii_alphanumeric() || c == '.'));
                Tok::Number(n)
            }
            c if c.is_alphabetic() || c == '_' || c == ':' => {
                let word = self.take_name(is_name_char);
                match word.split_once(':') {
                    Some((prefix, local)) => Tok::PName {
                        prefix: prefix.to_string(),
                        local: local.to_string(),
                    },
                    None => Tok::Word(word),
                }
            }
            c => {
                self.bump();
                Tok::Punct(c)
            }
        };
        Ok(Some(Token { tok, pos }))
    }

    fn is_blank_node_start(&self) -> bool {
        let mut it = self.chars.clone();
        it.next();
        it.next() == Some(':')
    }

    fn next_is_digit(&self) -> bool {
        let mut it = self.chars.clone();
        it.next();
        it.next().is_some_and(|c| c.is_ascii_digit())
    }

    /// Like `take_while`, but a `.` is only part of the name when another
    /// name character follows it.
    fn take_name(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c == '.' {
                let mut it = self.chars.clone();
                it.next();
                match it.next() {
                    Some(n) if n != '.' && f(n) => {}
                    _ => break,
                }
            } else if !f(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn string(&mut self, pos: Pos) -> Result<Tok, ParseDiagnostic> {
        self.bump();
        let long = {
            let mut it = self.chars.clone();
            it.next() == Some('"') && it.next() == Some('"')
        };
        if long {
            self.bump();
            self.bump();
        }
        let mut text = String::new();
        loop {
            let Some(c) = self.bump() else {
                return Err(ParseDiagnostic::error(pos, "unterminated string literal"));
            };
            match c {
                '"' if !long => break,
                '"' if long => {
                    let mut it = self.chars.clone();
                    if it.next() == Some('"') && it.next() == Some('"') {
                        self.bump();
                        self.bump();
                        break;
                    }
                    text.push('"');
                }
                '\n' if !long => {
                    return Err(ParseDiagnostic::error(pos, "newline in short string literal"));
                }
                '\\' => {
                    let esc_pos = self.pos();
                    let e = self
                        .bump()
                        .ok_or_else(|| ParseDiagnostic::error(pos, "unterminated string literal"))?;
                    match e {
                        'n' => text.push('\n'),
                        't' => text.push('\t'),
                        'r' => text.push('\r'),
                        'b' => text.push('\u{8}'),
                        'f' => text.push('\u{c}'),
                        '"' => text.push('"'),
                        '\'' => text.push('\''),
                        '\\' => text.push('\\'),
                        'u' | 'U' => {
                            let len = if e == 'u' { 4 } else { 8 };
                            let mut hex = String::new();
                            for _ in 0..len {
                                match self.bump() {
                                    Some(h) if h.is_ascii_hexdigit() => hex.push(h),
                                    _ => {
                                        return Err(ParseDiagnostic::error(
                                            esc_pos,
                                            "malformed unicode escape",
                                        ))
                                    }
                                }
                            }
                            let ch = u32::from_str_radix(&hex, 16)
                                .ok()
                                .and_then(char::from_u32)
                                .ok_or_else(|| ParseDiagnostic::error(esc_pos, "invalid code point"))?;
                            text.push(ch);
                        }
                        other => {
                            return Err(ParseDiagnostic::error(
                                esc_pos,
                                format!("unknown escape `\\{other}`"),
                            ))
                        }
                    }
                }
                c => text.push(c),
            }
        }
        let lang = if self.peek() == Some('@') {
            let at = self.pos();
            self.bump();
            let tag = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
            if !crate::ontology::is_valid_language_tag(&tag) {
                return Err(ParseDiagnostic::error(at, format!("malformed language tag `{tag}`")));
            }
            Some(tag)
        } else {
            None
        };
        Ok(Tok::Literal { text, lang })
    }
}
