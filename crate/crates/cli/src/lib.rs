pub mod dsl;
pub mod output;
pub mod run;

pub use run::run;
