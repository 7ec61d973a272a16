#![no_main]
use frattkit::pingpong::AnyCertificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(cert) = AnyCertificate::parse(s) {
            let _ = cert.verify();
            let text = cert.to_text();
            assert_eq!(AnyCertificate::parse(&text).unwrap().to_text(), text);
        }
    }
});
