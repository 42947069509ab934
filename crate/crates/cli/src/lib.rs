pub mod commands;
pub mod corpus;
pub mod report;
pub mod ringfile;
