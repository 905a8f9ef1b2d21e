/** Exact rational arithmetic on the wire's "p/q" strings, via bigint. */

export interface Rat {
  n: bigint;
  d: bigint;
}

const gcd = (a: bigint, b: bigint): bigint => (b === 0n ? (a < 0n ? -a : a) : gcd(b, a % b));

export function rat(s: string | number): Rat {
  const text = String(s).trim();
  const m = /^(-?\d+)(?:\/(\d+))?$/.exec(text);
  if (!m) throw new Error(`bad rational ${JSON.stringify(s)}`);
  return norm({ n: BigInt(m[1]), d: BigInt(m[2] ?? "1") });
}

function norm({ n, d }: Rat): Rat {
  if (d === 0n) throw new Error("zero denominator");
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d) || 1n;
  return { n: n / g, d: d / g };
}

export const add = (a: Rat, b: Rat): Rat => norm({ n: a.n * b.d + b.n * a.d, d: a.d * b.d });
export const neg = (a: Rat): Rat => ({ n: -a.n, d: a.d });
export const mul = (a: Rat, b: Rat): Rat => norm({ n: a.n * b.n, d: a.d * b.d });
export const isZero = (a: Rat): boolean => a.n === 0n;
export const eq = (a: Rat, b: Rat): boolean => a.n === b.n && a.d === b.d;
export const show = (a: Rat): string => (a.d === 1n ? `${a.n}` : `${a.n}/${a.d}`);
