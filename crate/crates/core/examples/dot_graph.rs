//! DOT output for a graph type; pipe into `dot -Tsvg`.

use belitskii::graph::type_to_dot;
use belitskii::GraphType;

fn main() -> belitskii::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "123|478|56: 57|24|_25_".into());
    let t: GraphType = text.parse()?;
    print!("{}", type_to_dot(&t));
    Ok(())
}
