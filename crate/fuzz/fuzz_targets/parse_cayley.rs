#![no_main]
use frattkit::frattini::FiniteGroup;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = FiniteGroup::parse_cayley(s) {
            let back = FiniteGroup::parse_cayley(&g.to_cayley()).unwrap();
            assert_eq!(back.order(), g.order());
        }
    }
});
