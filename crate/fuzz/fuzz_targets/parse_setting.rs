//! Measurement-direction parsing covers both input shapes (component
//! triple and planar angle); the first input byte selects the shape.
//! Accepted directions must be unit length.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, rest)) = data.split_first() else {
        return;
    };
    let plane = selector & 1 == 1;
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(direction) = relbell_cli::config::parse_setting(text, plane, "--a") {
            let v = direction.vector();
            assert!((v.norm() - 1.0).abs() < 1e-9);
        }
    }
});
