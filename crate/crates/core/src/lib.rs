pub mod rings;
