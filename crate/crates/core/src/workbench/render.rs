use crate::polyomino::Polyomino;

/// ASCII picture of `p` over its bounding box, `y` increasing upwards.
pub fn render(p: &Polyomino) -> String {
    let (lo, hi) = p.cell_bounds();
    (lo.y..=hi.y)
        .rev()
        .map(|y| (lo.x..=hi.x).map(|x| if p.contains(crate::lattice::Cell::new(x, y)) { '█' } else { '·' }).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn pictures() {
        assert_eq!(render(&shapes::domino()), "██");
        assert_eq!(render(&shapes::single()), "█");
        assert_eq!(render(&shapes::ring(3, 3)), "███\n█·█\n███");
        assert_eq!(render(&shapes::staircase(2)), "·██\n██·");
    }
}
