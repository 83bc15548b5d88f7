//! How the S-transform is undone: θ splits into one cycle per Lyndon
//! factor, and walking the cycles from the back rebuilds the input.

use bwts::{
    bwts_forward, lyndon_factorize, match_permutation, multi_thread, thread_from, OrderKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = b"mississippi river";
    let eta = bwts_forward(s, OrderKind::InfinitePeriodic)?;
    let theta = match_permutation(&eta)?;
    println!("eta   = {:?}", String::from_utf8_lossy(&eta));
    println!("theta = {:?}", theta.as_slice());

    let mut cycles = theta.cycle_lengths();
    let mut factors: Vec<usize> = lyndon_factorize(s)?.factor_lengths().collect();
    cycles.sort_unstable();
    factors.sort_unstable();
    println!("cycle lengths  {cycles:?}");
    println!("factor lengths {factors:?}");

    // A single thread from 0 recovers only the factor containing slot 0.
    let one = thread_from(&eta, &theta, 0)?;
    println!("thread from 0  {:?}", String::from_utf8_lossy(&one));

    let all = multi_thread(&eta, theta)?;
    println!("all threads    {:?}", String::from_utf8_lossy(&all));
    assert_eq!(all, s);
    Ok(())
}
