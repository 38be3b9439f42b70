from fractions import Fraction

from django import forms

from core.combinatorics.diagrams import parse_diagram, parse_partial
from core.combinatorics.partitions import parse_partition
from core.exceptions import ParseError


class PartitionField(forms.CharField):
    """Partition text such as ``5^2,4,1``; the empty string is the empty partition."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("required", False)
        kwargs.setdefault("strip", True)
        super().__init__(*args, **kwargs)

    def to_python(self, value):
        text = super().to_python(value)
        try:
            return parse_partition(text)
        except ParseError as exc:
            raise forms.ValidationError(str(exc)) from exc


class DiagramField(forms.CharField):
    def to_python(self, value):
        text = super().to_python(value)
        try:
            return parse_diagram(text)
        except ParseError as exc:
            raise forms.ValidationError(str(exc)) from exc


class ScalarField(forms.CharField):
    """An exact rational such as ``3`` or ``-1/2``."""

    def to_python(self, value):
        text = super().to_python(value)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise forms.ValidationError(f"Not an exact rational: {text!r}") from exc


class AbacusForm(forms.Form):
    partition = PartitionField()
    p = forms.IntegerField()
    b = forms.IntegerField(required=False, min_value=1)


class CoreForm(forms.Form):
    partition = PartitionField()
    p = forms.IntegerField()


class ReduceForm(forms.Form):
    partition = PartitionField()
    p = forms.IntegerField()
    b = forms.IntegerField(min_value=1)


class OrbitSameForm(forms.Form):
    lam = PartitionField()
    mu = PartitionField()
    delta = forms.IntegerField()
    p = forms.IntegerField(required=False)
    char0 = forms.BooleanField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        if not cleaned_data.get("char0") and cleaned_data.get("p") is None:
            self.add_error("p", "--p is required unless --char0 is given.")
        return cleaned_data


class BlockSameForm(forms.Form):
    lam = PartitionField()
    mu = PartitionField()
    delta = forms.IntegerField()
    p = forms.IntegerField()
    labels = forms.BooleanField(required=False)
    trace = forms.BooleanField(required=False)


class BlockClassesForm(forms.Form):
    n = forms.IntegerField(min_value=0)
    delta = forms.IntegerField()
    p = forms.IntegerField()
    xlsx = forms.CharField(required=False)

    def clean_xlsx(self):
        path = self.cleaned_data.get("xlsx")
        if path and not path.endswith(".xlsx"):
            raise forms.ValidationError("The export file name must end with .xlsx")
        return path or None


class HomsPredictForm(forms.Form):
    partition = PartitionField()
    delta = forms.IntegerField()
    p = forms.IntegerField()
    max_index = forms.IntegerField(required=False, min_value=2)
    r_min = forms.IntegerField(required=False)
    r_max = forms.IntegerField(required=False)
    max_size = forms.IntegerField(required=False, min_value=0)

    def clean(self):
        cleaned_data = super().clean()
        r_min, r_max = cleaned_data.get("r_min"), cleaned_data.get("r_max")
        if r_min is not None and r_max is not None and r_min > r_max:
            self.add_error("r_max", "--r-max must not be smaller than --r-min.")
        return cleaned_data


class DiagramMulForm(forms.Form):
    x = DiagramField()
    y = DiagramField()
    delta = ScalarField()
    n = forms.IntegerField(required=False, min_value=1)
    p = forms.IntegerField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        n, delta = cleaned_data.get("n"), cleaned_data.get("delta")
        for name in ("x", "y"):
            diagram = cleaned_data.get(name)
            if n is not None and diagram is not None and diagram.n != n:
                self.add_error(name, f"Diagram has {diagram.n} nodes per row, expected {n}.")
        if cleaned_data.get("p") is not None and delta is not None and delta.denominator != 1:
            self.add_error("delta", "delta must be an integer when working mod p.")
        return cleaned_data


class DiagramActForm(forms.Form):
    x = DiagramField()
    v = forms.CharField(required=False)
    delta = ScalarField()
    p = forms.IntegerField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        x = cleaned_data.get("x")
        if x is not None:
            try:
                cleaned_data["v"] = parse_partial(cleaned_data.get("v") or "[]", x.n)
            except ParseError as exc:
                self.add_error("v", str(exc))
        delta = cleaned_data.get("delta")
        if cleaned_data.get("p") is not None and delta is not None and delta.denominator != 1:
            self.add_error("delta", "delta must be an integer when working mod p.")
        return cleaned_data
