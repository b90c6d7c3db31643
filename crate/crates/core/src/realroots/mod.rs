//! Exact real-root certification: Sturm counting, isolation, same-sign
//! tests and interlacing.

mod interlace;
mod isolate;
mod sturm;

pub use interlace::{interlaces, wronskian_orientation, InterlaceVerdict, Relation};
pub use isolate::{isolate_roots, refine_interval, IsolatingInterval};
pub use sturm::{is_real_rooted, roots_all_real_same_sign, sturm_root_count, Endpoint, SturmChain};
