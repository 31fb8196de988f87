pub mod clt;
pub mod error;
pub mod exact;
pub mod group;
pub mod growth;
pub mod jack;
pub mod measures;
pub mod moments;
pub mod partition;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Alpha, Scalar};
pub use partition::{partitions_of, syt_enumerate, Cell, GrowthPath, Partition};
pub use report::{IdentityReport, Status};
