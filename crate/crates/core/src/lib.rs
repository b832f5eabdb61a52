pub mod acceptance;
pub mod analysis;
pub mod ddop;
pub mod lattice;
pub mod poly;
pub mod weyl;
pub mod ybe;
