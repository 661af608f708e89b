//! Complex scalar fields on meshes or in closed form, manufactured solution
//! families with prescribed lateral Cauchy data, discrete Hoelder-norm
//! estimates, boundary traces, and the Liouville transform.

mod analytic;
mod family;
mod holder;
mod liouville;
mod trace;

pub use analytic::{plane_wave, AnalyticField, FieldDomain, ScalarField};
pub use family::{make_zero_cauchy_family, VanishingOrder};
pub use holder::{holder_c1_estimate, holder_norm_estimate, C1HolderEstimate, HolderEstimate};
pub use liouville::{liouville_transform, CoefficientSet, LiouvilleBundle};
pub use trace::{cauchy_trace, dump_field_csv, dump_trace_csv, CauchyTrace};
