// Drive the command-line front end in-process and read its CSV.

use uq21::cli::execute;

/// Returns the number of data rows in the basis table.
pub fn run_example() -> Result<usize, String> {
    let out = execute(["uq21", "basis", "--sig", "4,2,-2", "--basis", "u", "--lmax", "1", "--format", "csv"]);
    if out.code != 0 {
        return Err(out.stderr);
    }
    print!("{}", out.stdout);

    let weyl = execute(["uq21", "weyl", "--sig", "3,1,-1", "--q", "1/2", "--lmax", "1", "--smax", "1", "--depth", "1", "--via-racah", "--format", "csv"]);
    print!("{}", weyl.stdout);

    Ok(out.stdout.lines().count() - 1)
}

fn main() {
    let rows = run_example().expect("cli example");
    eprintln!("{rows} basis rows");
}
