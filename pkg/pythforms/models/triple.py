from pydantic import BaseModel, ConfigDict, Field, model_validator

from pythforms.utils.validators import check_params


class TripleParams(BaseModel):
    """Generator pair (a, b) of a primitive Pythagorean triangle"""

    model_config = ConfigDict(frozen=True)

    a: int = Field(..., gt=0)
    b: int = Field(..., gt=0)

    @model_validator(mode="after")
    def _pythagorean_constraints(self) -> "TripleParams":
        check_params(self.a, self.b)
        return self

    def as_tuple(self):
        return (self.a, self.b)


class PrimitiveTriple(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: int = Field(..., gt=0, description="Even leg, 2ab")
    y: int = Field(..., gt=0, description="Odd leg, a² - b²")
    z: int = Field(..., gt=0, description="Hypotenuse, a² + b²")
    r: int = Field(..., gt=0, description="Inradius, b(a - b)")


class FormValues(BaseModel):
    """The three form values embedded in one triangle, in increasing order"""

    model_config = ConfigDict(frozen=True)

    n13: int = Field(..., gt=0, description="(a - b)² + 2b² = x + y - 4r")
    n15: int = Field(..., gt=0, description="a² + b² = x + y - 2r")
    n17: int = Field(..., gt=0, description="(a + b)² - 2b² = x + y")

    def as_tuple(self):
        return (self.n13, self.n15, self.n17)
