from projtc.validate.oracles import pascalMod2, exhaustiveKernelDegree1, idealMembershipBruteforce, relativeHeightBruteforce
from projtc.validate.checks import CheckKeys, runChecks
