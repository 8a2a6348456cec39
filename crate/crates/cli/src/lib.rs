//! Library half of the `loosecheck` binary: the report types are public so
//! integration tests (and scripts embedding the tool) can parse its JSON.

pub mod report;
