//! Temperature-1 tile self-assembly in the square lattice.

pub mod analysis;
pub mod cogrow;
pub mod gen;
pub mod oracle;
pub mod path;
pub mod regions;
pub mod tas;
pub mod verify;
pub mod window;

pub use path::{Direction, Orientation, PathError, Point, Ray, Vector2, Word};
pub use regions::{BiInfinitePath, Hand, RegionError, Side, SideMap};
pub use tas::{Assembly, Glue, Tas, TasError, TileType};
pub use window::{Window, WindowError, WindowGrid};
