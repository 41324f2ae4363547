from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

from formwell.core.forms.form import Form, Gen
from formwell.core.poly.poly import Poly, Var


class Potential(BaseModel):
    """omega = f1 dz1 + f2 dz2 + fb1 dzb1 + fb2 dzb2."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    f1: Poly = Field(default_factory=Poly.zero)
    f2: Poly = Field(default_factory=Poly.zero)
    fb1: Poly = Field(default_factory=Poly.zero)
    fb2: Poly = Field(default_factory=Poly.zero)

    @property
    def functions(self) -> Tuple[Poly, Poly, Poly, Poly]:
        return (self.f1, self.f2, self.fb1, self.fb2)

    def to_form(self) -> Form:
        return Form(
            {
                (Gen.DZ1,): self.f1,
                (Gen.DZ2,): self.f2,
                (Gen.DZB1,): self.fb1,
                (Gen.DZB2,): self.fb2,
            }
        )

    @classmethod
    def from_form(cls, w: Form) -> "Potential":
        return cls(
            f1=w.coefficient(Gen.DZ1),
            f2=w.coefficient(Gen.DZ2),
            fb1=w.coefficient(Gen.DZB1),
            fb2=w.coefficient(Gen.DZB2),
        )

    def render(self) -> Tuple[str, str, str, str]:
        return tuple(p.render() for p in self.functions)  # type: ignore[return-value]


def gauge_transform(w: Potential, u: Poly) -> Potential:
    """omega + du."""
    return Potential(
        f1=w.f1 + u.partial(Var.Z1),
        f2=w.f2 + u.partial(Var.Z2),
        fb1=w.fb1 + u.partial(Var.ZB1),
        fb2=w.fb2 + u.partial(Var.ZB2),
    )
