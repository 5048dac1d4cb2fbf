//! Shared test-only support code: high-precision oracles and finite
//! difference helpers. Lives in the test tree, never in the library.

#![allow(dead_code)]

pub mod dd;
