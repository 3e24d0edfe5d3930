//! Cutting the torus open and drawing the resulting rectangle periodically.

pub mod barycentric;
pub mod cut;
pub mod overlay;
pub mod svg;
pub mod tile;
pub mod verify;

pub use barycentric::{draw, DrawError, PeriodicDrawing, Point};
pub use cut::{cut, Corner, Place, RectangleGraph};
pub use overlay::{overlay, OverlayEdgeKind, TorusOverlay};
pub use svg::to_svg;
pub use tile::{tile, TiledDrawing};
pub use verify::{draw_and_verify, DrawingReport};
