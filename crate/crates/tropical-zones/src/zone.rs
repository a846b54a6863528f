//! Zone maps: the piecewise-linear maps that transition maps induce on valuations.

use moves::{compose_transition, transition_between, MoveKind, TransitionMap};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use weyl_core::{braid_graph, CartanDatum, Family, MoveTag, TwistedWeyl};

use crate::expr::{tropicalize, SfExpression, TropExpression};
use crate::puiseux::PuiseuxScalar;
use crate::semifields::{is_dyadic, SemifieldTag, TropicalQ};
use crate::ZoneError;

/// Moves whose zone maps are provided.
pub fn zone_supported(tag: MoveTag) -> bool {
    tag.is_standard() || matches!(tag, MoveTag::Ns43i | MoveTag::Ns44 | MoveTag::Ns45 | MoveTag::Ns46)
}

fn check_move(tag: MoveTag) -> Result<(), ZoneError> {
    if !zone_supported(tag) {
        return Err(ZoneError::UnsupportedMove(format!("no zone map for {}", tag.name())));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZoneMap {
    pub kind: MoveKind,
    pub expression: TropExpression,
}

impl ZoneMap {
    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>, ZoneError> {
        self.expression.evaluate(v)
    }
}

/// The zone map of one move, in the tuple order of its identity.
pub fn zone_map(kind: MoveKind) -> Result<ZoneMap, ZoneError> {
    check_move(kind.tag)?;
    Ok(ZoneMap {
        kind,
        expression: tropicalize(&SfExpression::for_move(kind)?),
    })
}

/// The zone map of a transition map, on valuations indexed by word positions.
pub fn zone_transition(datum: &CartanDatum, map: &TransitionMap, v: &[BigRational]) -> Result<Vec<BigRational>, ZoneError> {
    for site in &map.path {
        check_move(site.tag)?;
    }
    let t: Vec<TropicalQ> = v.iter().cloned().map(TropicalQ).collect();
    Ok(compose_transition(datum, map, &t)?.into_iter().map(|x| x.0).collect())
}

pub fn valuations(x: &[PuiseuxScalar]) -> Result<Vec<BigRational>, ZoneError> {
    x.iter().map(PuiseuxScalar::valuation).collect()
}

/// Types where U^{+τ}(F) is modelled for tropical F: A with any star, B2 with the trivial
/// star, D with a nontrivial star.
pub fn utau_supported(datum: &CartanDatum) -> bool {
    let l = datum.label;
    if l.doubled {
        return false;
    }
    match l.family {
        Family::A => true,
        Family::B | Family::C => l.rank == 2 && datum.star_is_identity(),
        Family::D => !datum.star_is_identity(),
        Family::G => false,
    }
}

fn check_type(datum: &CartanDatum) -> Result<(), ZoneError> {
    if !utau_supported(datum) {
        return Err(ZoneError::UnsupportedType(format!(
            "{} with {} star",
            datum.label,
            if datum.star_is_identity() { "trivial" } else { "nontrivial" }
        )));
    }
    Ok(())
}

/// Whether the coordinate vectors (one for every involution word of w) form a point of
/// U^{+τ}_w(F) for F = TropicalQ or TropicalZHalf: every edge of the braid graph carries
/// one vector to the other.
pub fn utau_tropical_membership(
    tw: &TwistedWeyl,
    w: &[usize],
    tuple: &[(Vec<usize>, Vec<BigRational>)],
    field: SemifieldTag,
) -> Result<bool, ZoneError> {
    check_type(tw.datum())?;
    if !matches!(field, SemifieldTag::TropicalQ | SemifieldTag::TropicalZHalf) {
        return Err(ZoneError::Domain(format!("membership over {field} is not modelled")));
    }
    let e = tw.twisted_id(&tw.group().from_word(w)?)?;
    let graph = braid_graph(tw, &tw.group().element(e))?;
    if tuple.len() != graph.vertices.len() {
        return Err(ZoneError::Domain(format!(
            "expected {} involution words, got {}",
            graph.vertices.len(),
            tuple.len()
        )));
    }
    let mut coords: Vec<Option<&Vec<BigRational>>> = vec![None; graph.vertices.len()];
    for (word, c) in tuple {
        let k = graph
            .vertex_index(word)
            .ok_or_else(|| ZoneError::Domain(format!("{word:?} is not an involution word of w")))?;
        if coords[k].is_some() {
            return Err(ZoneError::Domain(format!("{word:?} appears twice")));
        }
        if c.len() != word.len() {
            return Err(ZoneError::Arity {
                expected: word.len(),
                got: c.len(),
            });
        }
        coords[k] = Some(c);
    }
    if field == SemifieldTag::TropicalZHalf && tuple.iter().any(|(_, c)| c.iter().any(|x| !is_dyadic(x))) {
        return Ok(false);
    }
    for edge in &graph.edges {
        let map = TransitionMap {
            source: graph.vertices[edge.from].clone(),
            target: graph.vertices[edge.to].clone(),
            path: vec![edge.site.clone()],
        };
        let src = coords[edge.from].expect("every vertex is present");
        if &zone_transition(tw.datum(), &map, src)? != coords[edge.to].expect("every vertex is present") {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full tuple of a point given on one involution word.
pub fn utau_tuple(
    tw: &TwistedWeyl,
    word: &[usize],
    coords: &[BigRational],
) -> Result<Vec<(Vec<usize>, Vec<BigRational>)>, ZoneError> {
    check_type(tw.datum())?;
    let e = tw.involution_target(word)?;
    let mut out = Vec::new();
    for target in tw.involution_words_id(e)? {
        let map = transition_between(tw, word, &target)?;
        let c = zone_transition(tw.datum(), &map, coords)?;
        out.push((target, c));
    }
    Ok(out)
}

/// A point of U^{+τ}_w(ℚ) in the coordinates of one involution word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalPoint {
    pub word: Vec<usize>,
    #[serde(with = "rat_vec")]
    pub coords: Vec<BigRational>,
}

pub(crate) mod rat_vec {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(crate::semifields::rat_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        use serde::de::Error;
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| pinned_groups::scalar::parse_rational(x).map_err(D::Error::custom))
            .collect()
    }
}

/// The action of the generator (i, v) on U^{+τ}(ℚ): append v when the cell grows, else
/// move to a word ending in i and replace its last coordinate c by min(c, v).
pub fn zone_action(tw: &TwistedWeyl, i: usize, v: &BigRational, point: &TropicalPoint) -> Result<TropicalPoint, ZoneError> {
    let datum = tw.datum();
    check_type(datum)?;
    datum.check_letter(i)?;
    if point.coords.len() != point.word.len() {
        return Err(ZoneError::Arity {
            expected: point.word.len(),
            got: point.coords.len(),
        });
    }
    let c = tw.involution_target(&point.word)?;
    if !tw.is_involution_word(c, &point.word)? {
        return Err(ZoneError::Domain(format!("{:?} is not an involution word", point.word)));
    }
    let si = tw.group().id_of_word(&[datum.star_of(i)])?;
    let new = tw.cell_index_action_id(si, c)?;
    if new != c {
        let mut out = point.clone();
        out.word.push(i);
        out.coords.push(v.clone());
        return Ok(out);
    }
    let target = tw
        .involution_words_id(c)?
        .into_iter()
        .find(|w| w.last() == Some(&i))
        .ok_or_else(|| ZoneError::Domain(format!("no involution word ends in {i}")))?;
    let map = transition_between(tw, &point.word, &target)?;
    let mut coords = zone_transition(datum, &map, &point.coords)?;
    let last = coords.len() - 1;
    coords[last] = coords[last].clone().min(v.clone());
    Ok(TropicalPoint { word: target, coords })
}
