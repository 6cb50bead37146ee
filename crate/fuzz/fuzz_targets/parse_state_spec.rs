#![no_main]

use libfuzzer_sys::fuzz_target;

// State-spec strings come straight from the CLI; parsing must never panic
// and accepted specs must round-trip through Display into something the
// parser accepts again.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = dwf_cli::parse_state_spec(text) {
            let shown = spec.to_string();
            match spec {
                dwf_cli::StateSpec::Bloch(_) | dwf_cli::StateSpec::Bell(_) => {}
                _ => {
                    dwf_cli::parse_state_spec(&shown).expect("displayed spec reparses");
                }
            }
        }
    }
});
