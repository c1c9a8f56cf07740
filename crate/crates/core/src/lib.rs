//! Schubert calculus on Grassmannians: classical and quantum cohomology,
//! the center-shift operator and its root-system generalization.

mod engine;

pub mod classical;
pub mod error;
pub mod fulton_woodward;
pub mod quantum;
pub mod rootsys;
pub mod schubert_index;
pub mod transform;

pub use classical::{cup, ClassicalRing, CohClass};
pub use error::{Error, Result};
pub use quantum::{gw3, qmul, GWInstance, QClass, QuantumRing};
pub use schubert_index::{GrContext, Partition, SchubertIndex};
pub use transform::{
    reduce_to_classical, spoint_invariant, t_op, t_pow, transform_instance, InvariantEvaluator, Reduction, SPointValue,
    ShiftVector, Transformed,
};
