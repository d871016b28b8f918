pub mod category;
pub mod instance;
pub mod paths;
pub mod poset;
pub mod system;

pub use category::{AcyclicCategory, Generator, Morphism};
pub use instance::Instance;
pub use paths::{EdgeId, Path, PathId, PathTable, Quiver, VertexId};
pub use poset::{Chain, Interval, Poset};
pub use system::{Kind, ParallelClass, PathSystem};
