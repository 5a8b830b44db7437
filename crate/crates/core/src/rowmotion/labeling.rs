use rand::Rng;
use serde_json::{Map, Value};

use super::RowmotionError;
use crate::algebra::{random_invertible_with, seeded_rng, AlgebraError, RingDescriptor, RingElement};
use crate::poset::ExtendedPoset;

/// A ring element at every vertex of `P̂`, indexed by [`ExtendedPoset`] ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    ring: RingDescriptor,
    values: Vec<RingElement>,
}

impl Labeling {
    pub fn new(poset: &ExtendedPoset, ring: RingDescriptor, values: Vec<RingElement>) -> Result<Self, RowmotionError> {
        if values.len() != poset.hat_len() {
            return Err(RowmotionError::WrongSize { expected: poset.hat_len(), found: values.len() });
        }
        if let Some((v, x)) = values.iter().enumerate().find(|(_, x)| x.descriptor() != ring) {
            return Err(RowmotionError::RingMismatch {
                vertex: poset.name(v).to_string(),
                expected: ring,
                found: x.descriptor(),
            });
        }
        Ok(Labeling { ring, values })
    }

    pub fn from_fn(
        poset: &ExtendedPoset,
        ring: RingDescriptor,
        label: impl FnMut(usize) -> RingElement,
    ) -> Result<Self, RowmotionError> {
        Labeling::new(poset, ring, (0..poset.hat_len()).map(label).collect())
    }

    /// Seeded labeling with an invertible random label at every vertex,
    /// drawn in id order from one ChaCha8 stream.
    pub fn random(poset: &ExtendedPoset, ring: RingDescriptor, seed: u64, bound: u32) -> Result<Self, AlgebraError> {
        Labeling::random_with(&mut seeded_rng(seed), poset, ring, bound)
    }

    pub fn random_with<R: Rng + ?Sized>(
        rng: &mut R,
        poset: &ExtendedPoset,
        ring: RingDescriptor,
        bound: u32,
    ) -> Result<Self, AlgebraError> {
        let values =
            (0..poset.hat_len()).map(|_| random_invertible_with(rng, ring, bound)).collect::<Result<_, _>>()?;
        Ok(Labeling { ring, values })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn values(&self) -> &[RingElement] {
        &self.values
    }

    pub fn get(&self, v: usize) -> &RingElement {
        &self.values[v]
    }

    /// The label `a` at `BOT`.
    pub fn bottom(&self) -> &RingElement {
        &self.values[self.values.len() - 2]
    }

    /// The label `b` at `TOP`.
    pub fn top(&self) -> &RingElement {
        &self.values[self.values.len() - 1]
    }

    /// Copy with the label at `v` replaced.
    ///
    /// # Panics
    /// If `x` is from another ring.
    pub fn with_label(&self, v: usize, x: RingElement) -> Labeling {
        assert_eq!(x.descriptor(), self.ring, "label from another ring");
        let mut values = self.values.clone();
        values[v] = x;
        Labeling { ring: self.ring, values }
    }

    pub(crate) fn into_values(self) -> Vec<RingElement> {
        self.values
    }

    pub(crate) fn from_values_unchecked(ring: RingDescriptor, values: Vec<RingElement>) -> Self {
        Labeling { ring, values }
    }

    pub fn max_bits(&self) -> u64 {
        self.values.iter().map(RingElement::max_bits).max().unwrap_or(0)
    }

    /// `{"ring": ..., "labels": {"BOT": ..., "TOP": ..., "<name>": ...}}`.
    pub fn to_json(&self, poset: &ExtendedPoset) -> Value {
        let labels: Map<String, Value> =
            self.values.iter().enumerate().map(|(v, x)| (poset.name(v).to_string(), x.to_json())).collect();
        let mut out = Map::new();
        out.insert("ring".into(), self.ring.to_json());
        out.insert("labels".into(), Value::Object(labels));
        Value::Object(out)
    }

    pub fn from_json(poset: &ExtendedPoset, value: &Value) -> Result<Self, RowmotionError> {
        let ring = RingDescriptor::from_json(value.get("ring").unwrap_or(&Value::Null))?;
        let labels = value
            .get("labels")
            .and_then(Value::as_object)
            .ok_or_else(|| RowmotionError::Schema("missing object \"labels\"".into()))?;
        if let Some(key) = labels.keys().find(|k| poset.id(k).is_none()) {
            return Err(RowmotionError::Schema(format!("labels.{key}: not an element of the poset")));
        }
        let values = (0..poset.hat_len())
            .map(|v| {
                let name = poset.name(v);
                let x = labels.get(name).ok_or_else(|| {
                    RowmotionError::Schema(format!("labels.{name}: missing label for element {name}"))
                })?;
                Ok(RingElement::from_json(ring, x, &format!("labels.{name}"))?)
            })
            .collect::<Result<_, RowmotionError>>()?;
        Labeling::new(poset, ring, values)
    }
}
