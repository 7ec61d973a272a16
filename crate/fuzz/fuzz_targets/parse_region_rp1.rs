#![no_main]
use frattkit::mobius::RegionRP1;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = RegionRP1::parse(s) {
            assert_eq!(RegionRP1::parse(&r.to_string()).unwrap(), r);
        }
    }
});
