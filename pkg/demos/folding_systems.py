"""Folding systems: pairing a core language with a folding procedure.

The language of a system Phi = (L1, L2) is every fold(r, s) with r in L1,
s in L2, |r| = |s|.  Even two regular components can produce a language
that is not regular-looking at first glance.
"""

from foldlang import (Alphabet, FSystem, PROC_ALPHABET, RegularLang,
                      finite_language_system, fs_enumerate, fs_member)

AB = Alphabet("ab")

# Core aaaab* folded under (uu)*ddd: the even number of 'u' steps sends
# pairs of b's to the front, so the language splits into two families.
phi = FSystem(RegularLang("aaaab*", AB), RegularLang("(uu)*ddd", PROC_ALPHABET))

print("members of ( aaaab* , (uu)*ddd ) up to length 13:")
for w in fs_enumerate(phi, 13):
    print(f"  {w}")

ok, (r, s) = fs_member(phi, "bbaaaabbb", with_witness=True)
print(f"\n'bbaaaabbb' is a member: fold({r!r}, {s!r})")
print("'ababababa' is a member:", fs_member(phi, "ababababa"))

# Any finite set of words is the language of some system: take the union
# of the words as the core and let the procedure fold everything down.
words = {"ab", "ba", "abba"}
finite = finite_language_system(words)
print(f"\nfinite system for {sorted(words)}:",
      fs_enumerate(finite, max(map(len, words))))
