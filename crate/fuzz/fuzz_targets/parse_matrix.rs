#![no_main]
use frattkit::mobius::MobiusMap;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(m) = MobiusMap::parse(s) {
            // the printed form is normalized, so it must parse back to the same map
            assert_eq!(MobiusMap::parse(&m.to_string()).unwrap(), m);
        }
    }
});
