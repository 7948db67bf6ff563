//! Parses a text sample file with comments and a header, then analyses it.
//!
//! ```text
//! cargo run --example sample_file
//! ```

use std::path::Path;

use swt::io::{parse_samples, TimeBase};
use swt::{swt, Error};

const TEXT: &str = "\
# pressure trace, 8 Hz
value
1.5
2.0
\"2.25\"
1.0

-0.5
-1.0
0.0
0.75
";

pub fn run_example() -> swt::Result<()> {
    let samples = parse_samples(TEXT, Path::new("trace.txt"), TimeBase::Rate(8.0), 0.0)?;
    println!(
        "{} samples over [{}, {}] s",
        samples.len(),
        samples.window().start(),
        samples.window().end()
    );
    let spectrum = swt(&samples)?;
    for d in spectrum.dyads() {
        println!(
            "{:>2} {:>6.3} Hz {:+.4}",
            d.index, d.frequency, d.coefficient
        );
    }

    match parse_samples(
        "1\n2\n3,5\n",
        Path::new("bad.txt"),
        TimeBase::Duration(1.0),
        0.0,
    ) {
        Err(e @ Error::MalformedNumber { .. }) => println!("rejected: {e}"),
        other => panic!("expected a malformed-number error, got {other:?}"),
    }
    Ok(())
}

fn main() -> swt::Result<()> {
    run_example()
}
