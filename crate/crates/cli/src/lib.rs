//! Library surface of the command-line front end: the input document
//! schema, the catalog of built-in examples, and the report printers.

pub mod catalog;
pub mod input;
pub mod report;
