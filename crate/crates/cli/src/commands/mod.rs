//! One module per subcommand.

pub mod reliability;
pub mod simulate;
pub mod sweep;
pub mod tables;
pub mod verify;
