//! Serde documents for everything the CLI emits; each doc is the canonical
//! serialized form, and parsing an emitted file reproduces the doc exactly.

use serde::{Deserialize, Serialize};
use specht_core::lattice::LatticeGraph;
use specht_core::twopart::{socle_2part, uniserial_2part, TwoPartProfile};
use specht_core::Result;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorDoc {
    pub d: u128,
    pub nu: String,
    pub interval: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ProfileDoc {
    pub lambda: String,
    pub p: u128,
    pub alpha: u128,
    pub factors: Vec<FactorDoc>,
    /// pairs (d_i, d_j) with M_{ν(d_i)} ⊇ M_{ν(d_j)}
    pub order: Vec<(u128, u128)>,
    pub socle: String,
    pub uniserial: bool,
}

pub fn profile_doc(prof: &TwoPartProfile) -> Result<ProfileDoc> {
    let socle = socle_2part(&prof.lambda)?;
    let (uniserial, _) = uniserial_2part(&prof.lambda)?;
    Ok(ProfileDoc {
        lambda: prof.lambda.display(),
        p: prof.p,
        alpha: prof.alpha,
        factors: prof
            .factors
            .iter()
            .map(|f| FactorDoc {
                d: f.delta,
                nu: f.nu.display(),
                interval: f.source.display(),
            })
            .collect(),
        order: prof.order_pairs(),
        socle: socle.nu.display(),
        uniserial,
    })
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct NodeDoc {
    pub id: usize,
    pub dim: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EdgeDoc {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LatticeDoc {
    pub nodes: Vec<NodeDoc>,
    pub edges: Vec<EdgeDoc>,
    pub top: usize,
    pub bottom: usize,
}

pub fn lattice_doc(lat: &LatticeGraph) -> LatticeDoc {
    LatticeDoc {
        nodes: lat
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| NodeDoc { id, dim: n.dim })
            .collect(),
        edges: lat
            .edges
            .iter()
            .map(|(f, t, nu)| EdgeDoc {
                from: *f,
                to: *t,
                label: format!("D^({})", nu.display()),
            })
            .collect(),
        top: lat.top,
        bottom: lat.bottom,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use specht_core::partition::Partition;
    use specht_core::twopart::profile;

    #[test]
    fn profile_doc_round_trips() {
        let prof = profile(&Partition::parse("9,5").unwrap(), 2).unwrap();
        let doc = profile_doc(&prof).unwrap();
        assert_eq!(doc.factors.len(), 5);
        assert_eq!(doc.socle, "12,2");
        assert!(!doc.uniserial);
        let s = serde_json::to_string_pretty(&doc).unwrap();
        let back: ProfileDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn lattice_doc_round_trips() {
        use specht_core::backend::TwoPartTabloidBackend;
        use specht_core::lattice::{submodule_lattice, two_part_candidates};
        let lam = Partition::parse("4,2").unwrap();
        let tb = TwoPartTabloidBackend::new(&lam).unwrap();
        let lat = submodule_lattice(&tb, &two_part_candidates(&lam).unwrap(), 10_000).unwrap();
        let doc = lattice_doc(&lat);
        let s = serde_json::to_string(&doc).unwrap();
        let back: LatticeDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(doc, back);
        assert_eq!(doc.nodes[doc.bottom].dim, 0);
        assert_eq!(doc.nodes[doc.top].dim, 9);
    }
}
