"""Pumping as a refutation tool: the prime-length unary language.

If {a^p : p prime} were the language of a system with pumpable
components, some family a^(c + i*l) with l > 0 would stay inside it for
every i.  But c + i*l is composite for some small i, so the pump walks
out of the language -- no such system exists.
"""

from foldlang import PumpFamily, refute_unary_family
from foldlang.pumping import is_prime

for base, step in [(7, 2), (13, 4), (5, 1), (29, 5)]:
    family = PumpFamily(("a" * base, "a" * step), (1,), "L1", 0)
    i = refute_unary_family(is_prime, family)
    n = family.length_at(i)
    print(f"lengths {base} + {step}*i: first composite at i={i} "
          f"(length {n} = {next(d for d in range(2, n) if n % d == 0)} * "
          f"{n // next(d for d in range(2, n) if n % d == 0)})")

# A predicate the pump can never violate yields no witness: families with
# even base and even step stay inside the even-length language forever.
family = PumpFamily(("a" * 4, "a" * 2), (1,), "L1", 0)
print("\neven-length language, lengths 4 + 2*i:",
      refute_unary_family(lambda n: n % 2 == 0, family, bound=100))
