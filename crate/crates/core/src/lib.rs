pub mod blowup;
pub mod diagram;
pub mod fixed_locus;
pub mod hyperbolic;
pub mod lattice;
pub mod linalg;
pub mod tasks;
pub mod wild;
