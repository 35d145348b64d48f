pub mod bases;
pub mod cache;
pub mod catenohedron;
pub mod cauchy;
pub mod error;
pub mod fqsym;
pub mod json;
pub mod linear;
pub mod matrix;
pub mod perm;
pub mod poset;
pub mod qsym;
pub mod quotients;
pub mod splitting;
pub mod verify;
pub mod weyl;
