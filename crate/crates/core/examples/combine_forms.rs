//! Every way of gluing two copies of `12|34: 13`.

use belitskii::enumerate::{combine_census, cross_sets};
use belitskii::GraphType;

fn main() -> belitskii::Result<()> {
    let t: GraphType = "12|34: 13".parse()?;
    println!("cross sets: {}", cross_sets(&t, &t).len());
    for form in combine_census(&t, &t, true)? {
        println!("{form}");
    }
    Ok(())
}
