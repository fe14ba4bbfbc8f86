pub mod cli;
pub mod grid;
pub mod kirillov;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod structure;
