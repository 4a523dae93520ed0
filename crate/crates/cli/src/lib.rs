//! Text formats, vendored K₅ tables and verification suites behind the
//! `rotsys` binary.

pub mod appendix;
pub mod format;
pub mod report;
pub mod suites;

pub use appendix::{parse_appendix_a, parse_appendix_b, AppendixEntry, AppendixError};
pub use format::{parse_embedding, parse_embeddings, write_embedding, EmbeddingFile, FormatError};
pub use report::{Row, Status, VerificationReport};
pub use suites::{run_suite, Suite, SuiteError, SuiteOptions};
