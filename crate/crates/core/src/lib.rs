pub mod draw;
pub mod embedding;
pub mod io;
pub mod offset;
pub mod osculating;
pub mod par;
pub mod pipeline;
pub mod schema;
