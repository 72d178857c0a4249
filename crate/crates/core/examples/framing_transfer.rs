//! Solving for the framing correction that turns one framing vector into another.

use framed_braids::moves::solve_framing_transfer;
use framed_braids::{Permutation, Result};

fn main() -> Result<()> {
    let cases = [
        (vec![2, 1], vec![2, 0], vec![1, 1]),
        (vec![2, 1], vec![2, 0], vec![0, 0]),
        (vec![2, 3, 1, 4], vec![1, 0, -2, 5], vec![0, 0, -1, 5]),
    ];
    for (images, delta, kappa) in cases {
        let p = Permutation::from_images(images)?;
        match solve_framing_transfer(&p, &delta, &kappa)? {
            Some(r) => println!("p = {p}, δ = {delta:?}, κ = {kappa:?}  ->  r = {r:?}"),
            None => println!(
                "p = {p}, δ = {delta:?}, κ = {kappa:?}  ->  no solution (cycle sums differ)"
            ),
        }
    }
    Ok(())
}
