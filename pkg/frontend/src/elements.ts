/** Client-side linear algebra on wire documents, used to state properties. */

import { add, isZero, mul, rat, show } from "./rational.js";
import type { ElementDoc, ElementTerm, Scalar, VectorDoc } from "./types.js";

const FAMILY_RANK: Record<string, number> = { L: 0, I: 1, G: 2 };

function indexValue(index: number | string): number {
  if (typeof index === "number") return index;
  const m = /^(-?\d+)\/2$/.exec(index);
  if (m) return Number(m[1]) / 2;
  return Number(index);
}

/** Canonical form: merged coefficients, zero terms dropped, fixed order. */
export function normalizeElement(doc: ElementDoc): ElementDoc {
  const acc = new Map<string, { term: ElementTerm; coeff: ReturnType<typeof rat> }>();
  for (const t of doc.terms) {
    const key = `${t.family}:${t.index}`;
    const prev = acc.get(key);
    const c = rat(t.coeff ?? "1");
    if (prev) {
      prev.coeff = add(prev.coeff, c);
    } else {
      acc.set(key, { term: t, coeff: c });
    }
  }
  const terms: ElementTerm[] = [];
  for (const { term, coeff } of acc.values()) {
    if (!isZero(coeff)) {
      terms.push({ coeff: show(coeff), family: term.family, index: term.index });
    }
  }
  terms.sort(
    (a, b) =>
      FAMILY_RANK[a.family] - FAMILY_RANK[b.family] || indexValue(a.index) - indexValue(b.index),
  );
  return { algebra: doc.algebra, terms };
}

export function addElements(a: ElementDoc, b: ElementDoc): ElementDoc {
  return normalizeElement({ algebra: a.algebra, terms: [...a.terms, ...b.terms] });
}

export function scaleElement(doc: ElementDoc, c: Scalar): ElementDoc {
  const factor = rat(c);
  return normalizeElement({
    algebra: doc.algebra,
    terms: doc.terms.map((t) => ({ ...t, coeff: show(mul(rat(t.coeff ?? "1"), factor)) })),
  });
}

export function elementsEqual(a: ElementDoc, b: ElementDoc): boolean {
  const na = normalizeElement(a).terms;
  const nb = normalizeElement(b).terms;
  return (
    na.length === nb.length &&
    na.every(
      (t, idx) =>
        t.family === nb[idx].family &&
        String(t.index) === String(nb[idx].index) &&
        t.coeff === nb[idx].coeff,
    )
  );
}

function monomialKey(term: { i: Record<string, number>; j: number[]; k: Record<string, number> }) {
  const pack = (obj: Record<string, number>) =>
    Object.entries(obj)
      .filter(([, e]) => e !== 0)
      .sort(([a], [b]) => Number(a) - Number(b))
      .map(([p, e]) => `${p}^${e}`)
      .join(",");
  return `i[${pack(term.i ?? {})}]j[${[...(term.j ?? [])].sort((a, b) => a - b).join(",")}]k[${pack(term.k ?? {})}]`;
}

export function normalizeVector(doc: VectorDoc): VectorDoc {
  const acc = new Map<string, { term: VectorDoc["terms"][number]; coord: Map<string, ReturnType<typeof rat>> }>();
  for (const t of doc.terms) {
    const key = monomialKey(t);
    let slot = acc.get(key);
    if (!slot) {
      slot = { term: t, coord: new Map() };
      acc.set(key, slot);
    }
    for (const [k, c] of Object.entries(t.coord ?? {})) {
      slot.coord.set(k, add(slot.coord.get(k) ?? rat("0"), rat(c)));
    }
  }
  const terms = [];
  for (const [, { term, coord }] of [...acc.entries()].sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))) {
    const out: Record<string, Scalar> = {};
    for (const [k, c] of [...coord.entries()].sort(([a], [b]) => (a < b ? -1 : 1))) {
      if (!isZero(c)) out[k] = show(c);
    }
    if (Object.keys(out).length > 0) {
      terms.push({ i: term.i ?? {}, j: term.j ?? [], k: term.k ?? {}, coord: out });
    }
  }
  return { terms };
}

export function addVectors(a: VectorDoc, b: VectorDoc): VectorDoc {
  return normalizeVector({ terms: [...a.terms, ...b.terms] });
}

export function vectorsEqual(a: VectorDoc, b: VectorDoc): boolean {
  return JSON.stringify(normalizeVector(a)) === JSON.stringify(normalizeVector(b));
}
