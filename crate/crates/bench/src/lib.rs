//! Inputs shared by the benchmarks.

use multispin::fixtures::builtin_momenta;
use multispin::kernel::ratio;
use multispin::{LightlikeMomentum, Rational, RepresentationSet};

/// Representation plus a handful of momenta with small and large heights.
pub struct Workload {
    pub rep: RepresentationSet,
    pub momenta: Vec<LightlikeMomentum>,
    pub kappa: Rational,
}

impl Workload {
    pub fn new(count: usize) -> Workload {
        Workload {
            rep: RepresentationSet::standard(),
            momenta: builtin_momenta().into_iter().take(count).collect(),
            kappa: ratio(1, 3),
        }
    }
}
