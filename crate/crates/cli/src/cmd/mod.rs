pub mod audit;
pub mod fuzz;
pub mod generate;
pub mod search;
pub mod solve;
