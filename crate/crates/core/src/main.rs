//! `kitaev`: command-line front end for compiling, simulating and sweeping
//! Kitaev-chain eigenstates.

mod cli;

fn main() {
    std::process::exit(cli::run(std::env::args_os().collect()));
}
