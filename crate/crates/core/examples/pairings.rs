//! Prints the three cup-power pairings and their timings.

use std::time::Instant;

fn main() {
    for (name, f) in [
        (
            "zeta2",
            pbounded::gs::zeta2_pairing as fn() -> pbounded::Result<i64>,
        ),
        ("zeta4", pbounded::gs::zeta4_pairing),
        ("zeta8", pbounded::gs::zeta8_pairing),
    ] {
        let t = Instant::now();
        let v = f().expect("pairing");
        println!("{name} = {v} ({} ms)", t.elapsed().as_millis());
    }
}
