//! The vector parser must return Ok or Err on any string without panicking,
//! and every Ok value must be three finite numbers.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(parsed) = relbell_cli::config::parse_vec3(text) {
            assert!(parsed.iter().all(|v| v.is_finite()));
        }
    }
});
