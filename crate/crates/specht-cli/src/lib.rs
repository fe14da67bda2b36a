pub mod cache;
pub mod dot;
pub mod formats;
pub mod tikz;
