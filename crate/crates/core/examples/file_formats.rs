//! Reading and writing gems as JSON, plain text and Graphviz.

use gemkit::generators::torus_sum_gem;
use gemkit::io;

fn main() -> gemkit::Result<()> {
    let g = torus_sum_gem(1)?;
    let json = io::to_json_pretty(&g);
    let text = io::to_text(&g);
    println!("{json}\n\n{text}\n\n{}", io::to_dot(&g));
    assert_eq!(io::parse_gem(&json)?, g);
    assert_eq!(io::parse_gem(&text)?, g);
    Ok(())
}
