//! Process-wide memo of computed bases, keyed by input content.

use std::any::{Any, TypeId};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::engine::{self, ModuleOrder, Vector};
use crate::error::Result;
use crate::field::Field;

struct Entry<F> {
    order: ModuleOrder,
    input: Vec<Vector<F>>,
    truncate: Option<i64>,
    basis: Arc<Vec<Vector<F>>>,
}

type Slot = Arc<dyn Any + Send + Sync>;

const MAX_ENTRIES: usize = 50_000;

static CACHE: Lazy<RwLock<HashMap<u64, Vec<Slot>>>> = Lazy::new(|| RwLock::new(HashMap::new()));
static HITS: AtomicU64 = AtomicU64::new(0);
static MISSES: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
}

pub fn cache_stats() -> CacheStats {
    CacheStats {
        hits: HITS.load(Ordering::Relaxed),
        misses: MISSES.load(Ordering::Relaxed),
    }
}

pub fn clear_cache() {
    CACHE.write().clear();
}

pub(crate) fn groebner<F: Field>(
    input: Vec<Vector<F>>,
    order: &ModuleOrder,
    truncate: Option<i64>,
) -> Result<Arc<Vec<Vector<F>>>> {
    let mut h = DefaultHasher::new();
    TypeId::of::<F>().hash(&mut h);
    order.hash(&mut h);
    input.hash(&mut h);
    truncate.hash(&mut h);
    let key = h.finish();

    if let Some(slots) = CACHE.read().get(&key) {
        for slot in slots {
            if let Some(e) = slot.downcast_ref::<Entry<F>>() {
                if e.truncate == truncate && e.order == *order && e.input == input {
                    HITS.fetch_add(1, Ordering::Relaxed);
                    return Ok(e.basis.clone());
                }
            }
        }
    }
    MISSES.fetch_add(1, Ordering::Relaxed);
    let basis = Arc::new(engine::groebner(input.clone(), order, truncate)?);
    let entry: Slot = Arc::new(Entry {
        order: order.clone(),
        input,
        truncate,
        basis: basis.clone(),
    });
    let mut map = CACHE.write();
    if map.len() >= MAX_ENTRIES {
        map.clear();
    }
    map.entry(key).or_default().push(entry);
    Ok(basis)
}
