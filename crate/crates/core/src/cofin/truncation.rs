//! Set-level computation on a finite truncation of a frame family.
//!
//! For any truncation bound at or above the operation threshold, the
//! restriction of an exact algebra operation to the truncated carrier
//! equals the plain set computation done here. This is the master oracle
//! the property suites check the threshold analysis against.

use std::collections::BTreeSet;

use super::{AdmSet, CofinError, FrameFamily, PointId};

/// The finite carrier `head ∪ {Nat 0..=bound}` of a family.
pub struct Truncation<'a> {
    pub family: &'a FrameFamily,
    pub bound: u64,
    pub worlds: Vec<PointId>,
}

impl<'a> Truncation<'a> {
    pub fn new(family: &'a FrameFamily, bound: u64) -> Self {
        let worlds = family.pool(bound);
        Truncation {
            family,
            bound,
            worlds,
        }
    }

    /// Restriction of an admissible set to the truncated carrier.
    pub fn restrict(&self, x: &AdmSet) -> BTreeSet<PointId> {
        self.worlds
            .iter()
            .filter(|p| x.contains(p))
            .cloned()
            .collect()
    }

    pub fn neg(&self, x: &BTreeSet<PointId>) -> BTreeSet<PointId> {
        self.worlds
            .iter()
            .filter(|p| !x.contains(p))
            .cloned()
            .collect()
    }

    pub fn join(&self, x: &BTreeSet<PointId>, y: &BTreeSet<PointId>) -> BTreeSet<PointId> {
        x.union(y).cloned().collect()
    }

    pub fn meet(&self, x: &BTreeSet<PointId>, y: &BTreeSet<PointId>) -> BTreeSet<PointId> {
        x.intersection(y).cloned().collect()
    }

    /// `R⁻¹` image within the truncation.
    pub fn dia(
        &self,
        modality: u32,
        x: &BTreeSet<PointId>,
    ) -> Result<BTreeSet<PointId>, CofinError> {
        let mut out = BTreeSet::new();
        for w in &self.worlds {
            for t in x {
                if self.family.related(modality, w, t)? {
                    out.insert(w.clone());
                    break;
                }
            }
        }
        Ok(out)
    }
}
