#![no_main]

use libfuzzer_sys::fuzz_target;

// The sweep-config parser must never panic on arbitrary input, and an
// accepted config must satisfy its own invariants well enough to build a
// time grid.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(cfg) = dwf_cli::parse_config(text) {
            assert!(cfg.steps >= 2);
            assert!(cfg.t_stop > cfg.t_start);
            let grid = cfg.time_grid();
            assert_eq!(grid.len(), cfg.steps);
            assert!(grid[0] >= 0.0);
        }
    }
});
