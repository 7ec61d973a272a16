#![no_main]
use frattkit::freeprod::{End, FreeProductPresentation};
use libfuzzer_sys::fuzz_target;

// First line: a presentation such as "orders: 2 3". Second line: a word.
// Remaining text: an end.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.splitn(3, '\n');
    let Some(Ok(p)) = parts.next().map(FreeProductPresentation::parse) else { return };
    if let Some(word) = parts.next() {
        let _ = p.parse_word(word);
    }
    if let Some(end) = parts.next() {
        let _ = End::parse(&p, end);
    }
});
