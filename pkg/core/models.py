from django.db import models


class MoveKindChoice(models.TextChoices):
    A = "A", "slide one bead down and another up"
    D = "D", "send two beads over the arc"


class ReflectionKindChoice(models.TextChoices):
    SUM = "sum", "e_i + e_j"
    DIFF = "diff", "e_i - e_j"


class HomMechanismChoice(models.TextChoices):
    SUM_BALANCED = "sum-reflection/maximal-balanced"
    DIFF_CARTER_PAYNE = "diff-reflection/carter-payne"
