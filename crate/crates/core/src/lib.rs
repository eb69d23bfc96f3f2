pub mod cite;
pub mod abels;
pub mod bs;
pub mod classifier;
pub mod coxeter;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod verdict;
