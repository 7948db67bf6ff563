//! Prints the sign matrix linking trains to sub-interval samples.
//!
//! ```text
//! cargo run --example sign_matrix [N]
//! ```

use swt::{FrequencyGrid, SignMatrix, SquareWaveSolver};

pub fn run_example(n: usize) -> swt::Result<()> {
    let s = SignMatrix::new(n)?;
    let grid = FrequencyGrid::new(&swt::AnalysisWindow::unit(n)?);

    print!("      ");
    for i in 1..=n {
        print!("{:>3}", i);
    }
    println!();
    for j in 0..n {
        print!("V{:<4} ", j + 1);
        for &e in s.row(j) {
            print!("{:>3}", if e > 0 { "+" } else { "-" });
        }
        println!();
    }
    println!();
    for i in 1..=n {
        println!("train {i:>2}: {:.4} Hz", grid.get(i));
    }

    // neighbouring columns overlap, so the trains are not orthogonal
    if n >= 2 {
        println!("<col 1, col 2> = {}", s.column_dot(0, 1));
    }
    let solver = SquareWaveSolver::new(s)?;
    println!("smallest pivot: {}", solver.factorization().min_pivot());
    Ok(())
}

fn main() -> swt::Result<()> {
    let n = match std::env::args().nth(1) {
        Some(a) => a
            .parse()
            .map_err(|_| swt::Error::InvalidArgument(format!("not a size: {a}")))?,
        None => 10,
    };
    run_example(n)
}
