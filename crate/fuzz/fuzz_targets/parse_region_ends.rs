#![no_main]
use frattkit::freeprod::{FreeProductPresentation, RegionEnds};
use libfuzzer_sys::fuzz_target;

// First line: a presentation, the rest: a region of ends.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((head, body)) = s.split_once('\n') else { return };
    let Ok(p) = FreeProductPresentation::parse(head) else { return };
    if let Ok(r) = RegionEnds::parse(&p, body) {
        assert_eq!(RegionEnds::parse(&p, &r.display(&p)).unwrap(), r);
    }
});
