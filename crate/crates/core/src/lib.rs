pub mod catalog;
pub mod charclass;
pub mod cli;
pub mod obstruction;
pub mod ring;
pub mod steenrod;
