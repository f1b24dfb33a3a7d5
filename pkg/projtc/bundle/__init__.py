from projtc.bundle.charClasses import TotalSwClass, DualSwClass, dualTotalSw, qPoly
from projtc.bundle.model import BundleSpec, ProjectiveModel, buildProjectiveModel, twistEnhancement, deltaStar, swapEnhancements, lerayHirschRank
