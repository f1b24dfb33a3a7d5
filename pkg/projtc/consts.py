class Consts:
    Name = "projtc"
    # safety cap on dim E²_B = n + 2d
    MaxDim = 64
    KernelEnumerationCap = 24
    BruteforceCap = 20
    PascalCap = 64
    # relativeHeight sentinel: 1 lies in the ideal
    InIdealAtZero = -1
    ReservedNames = ("v", "vL", "vR")
