from projtc.bounds.heights import GenusInterval, height, inIdeal, relativeHeight, genusInterval
from projtc.bounds.intervals import Source, Side, Bound, BoundInterval, pointFiberInterval, fiberTcInterval, circleTcInterval, projectiveTcInterval
from projtc.bounds.powers import binomMod2, binomialPower, heightByExpansion, checkPowerVanishing, powerExpansionRhs, checkPowerExpansion
