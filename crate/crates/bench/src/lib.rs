//! Benchmarks for sub-alcove enumeration and the class census.
