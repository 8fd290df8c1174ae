//! Grid specifications must never panic, hang, or allocate unbounded
//! output; accepted grids are finite, ordered, and capped in size.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(grid) = relbell_cli::config::parse_beta_grid(text) {
            assert!(grid.len() <= 1_000_001);
            assert!(grid.iter().all(|v| v.is_finite()));
            assert!(grid.windows(2).all(|pair| pair[0] < pair[1]));
        }
    }
});
