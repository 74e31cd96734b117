use serde::{Deserialize, Serialize};

use super::{Axiom, EntityKind, OntologyStore};

/// Entity and axiom counts in the layout of an ontology editor's
/// statistics panel. Only asserted axioms are counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricsReport {
    pub axiom_count: usize,
    pub logical_axiom_count: usize,
    pub declaration_axiom_count: usize,
    pub annotation_assertion_count: usize,
    pub class_count: usize,
    pub object_property_count: usize,
    pub data_property_count: usize,
    pub individual_count: usize,
    pub annotation_property_count: usize,
}

pub fn compute_metrics(store: &OntologyStore) -> MetricsReport {
    let mut m = MetricsReport::default();
    for ax in store.axioms() {
        match ax {
            Axiom::Declaration { kind, .. } => {
                m.declaration_axiom_count += 1;
                match kind {
                    EntityKind::OwlClass => m.class_count += 1,
                    EntityKind::ObjectProperty => m.object_property_count += 1,
                    EntityKind::DataProperty => m.data_property_count += 1,
                    EntityKind::NamedIndividual => m.individual_count += 1,
                    EntityKind::AnnotationProperty => m.annotation_property_count += 1,
                }
            }
            Axiom::AnnotationAssertion { .. } => m.annotation_assertion_count += 1,
            _ => m.logical_axiom_count += 1,
        }
    }
    m.axiom_count = m.logical_axiom_count + m.declaration_axiom_count + m.annotation_assertion_count;
    m
}

impl MetricsReport {
    /// `(label, value)` rows in display order.
    pub fn rows(&self) -> [(&'static str, usize); 8] {
        [
            ("Axiom", self.axiom_count),
            ("Logical axioms count", self.logical_axiom_count),
            ("Declaration axioms count", self.declaration_axiom_count),
            ("Class count", self.class_count),
            ("Object property count", self.object_property_count),
            ("Data property count", self.data_property_count),
            ("Individual count", self.individual_count),
            ("Annotation property count", self.annotation_property_count),
        ]
    }

    pub fn to_table(&self) -> String {
        let width = self.rows().iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (label, value) in self.rows() {
            out.push_str(&format!("{label:<width$}  {value}\n"));
        }
        out
    }

    /// Signed per-row change from `self` to `after`.
    pub fn delta(&self, after: &MetricsReport) -> Vec<(&'static str, i64)> {
        self.rows()
            .iter()
            .zip(after.rows().iter())
            .map(|((label, b), (_, a))| (*label, *a as i64 - *b as i64))
            .collect()
    }
}
