"""
JSON-ready export of root-system data, facets and faces.

Exact rationals are serialized as ``"p/q"`` strings and lattice vectors as
integer lists, so every exported document can be parsed back and re-checked.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from rootlength.RootSystem import RootSystem

from typeguard import typechecked

from rootlength.system._polytope import Facet, FaceSpec
from rootlength.utils import format_rational, format_vector, parse_rational


class ExportMixin:
    """
    Mixin class converting root-system objects to and from JSON-ready dicts.
    """

    @typechecked
    def to_dict(self: RootSystem) -> dict:
        """
        Summary of the root-system data.

        Examples
        --------
        >>> RootSystem("G", 2).to_dict()["marks"]
        [3, 2]
        """
        return {
            "type": self.name,
            "family": self.family,
            "rank": self.rank,
            "cartan": [[int(x) for x in row] for row in self.cartan],
            "gram": [format_vector(row) for row in self.gram],
            "roots": len(self.roots),
            "theta": list(self.theta),
            "theta_s": None if self.theta_s is None else list(self.theta_s),
            "marks": list(self.marks),
            "maximal_roots": self.maximal_roots(),
            "coweights": [format_vector(c) for c in self.coweights],
        }

    @typechecked
    def facet_to_dict(self: RootSystem, facet: Facet) -> dict:
        return {
            "alpha": facet.alpha,
            "tau": list(facet.tau),
            "lambda": format_vector(facet.lam),
            "vertices": [list(b) for b in sorted(self.tight_roots(facet))],
        }

    @typechecked
    def facets_to_json(self: RootSystem, facets: list[Facet] | None = None) -> list[dict]:
        """
        Export facets as ``{"alpha", "tau", "lambda", "vertices"}`` records.

        Parameters
        ----------
        facets : list of Facet, optional
            Facets to export; all of them by default.
        """
        facets = self.enumerate_facets() if facets is None else facets
        return [self.facet_to_dict(f) for f in facets]

    @typechecked
    def facets_from_json(self: RootSystem, records: list[dict]) -> list[Facet]:
        """
        Parse exported facet records and check them against this system.

        Raises
        ------
        ValueError
            If a record's functional differs from ``tau omega_alpha^vee / m_alpha``,
            its vertices differ from the tight roots, or the functionals fail
            the half-space certificate.
        """
        facets = []
        for record in records:
            lam = tuple(parse_rational(x) for x in record["lambda"])
            self.check_vector(lam)
            facet = self.facet_of(int(record["alpha"]), tuple(int(i) for i in record["tau"]))
            if facet.lam != lam:
                raise ValueError(
                    f"Functional {record['lambda']} is not the functional of "
                    f"F(alpha_{record['alpha']}; {record['tau']})"
                )
            if "vertices" in record:
                vertices = {tuple(int(x) for x in v) for v in record["vertices"]}
                if vertices != self.tight_roots(facet):
                    raise ValueError(f"Vertices of F(alpha_{facet.alpha}; {list(facet.tau)}) do not match")
            facets.append(facet)
        if not self.check_halfspace_certificate([f.lam for f in facets]):
            raise ValueError("Parsed functionals fail the half-space certificate")
        return facets

    @typechecked
    def face_to_dict(self: RootSystem, spec: FaceSpec) -> dict:
        return {
            **spec.to_dict(),
            "vertices": [list(b) for b in sorted(self.face_roots(spec))],
            "codim": self.codimension(spec),
        }

    @typechecked
    def faces_summary(self: RootSystem) -> list[dict]:
        """
        One record per ``A`` in I with its closure data, ``|V(A)|``, codimension
        and the number of faces in its orbit.

        Examples
        --------
        >>> [r["orbit_size"] for r in RootSystem("A", 2).faces_summary()]
        [1, 3, 3, 6]
        """
        out = []
        for A in self.index_set():
            data = self.closure_data(A)
            spec = FaceSpec(A)
            barycenter = self.barycenter(A)
            out.append(
                {
                    "A": sorted(A),
                    "boundary": sorted(data.boundary),
                    "closure": sorted(data.closure),
                    "star": sorted(data.star),
                    "beta": list(data.beta),
                    "roots": len(self.face_roots(spec)),
                    "codim": self.codimension(spec) if A else 0,
                    "orbit_size": len(self.coset_reps(data.star)),
                    "barycenter": [format_rational(x) for x in barycenter],
                }
            )
        return out
