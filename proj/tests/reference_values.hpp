// generated by tests/oracles/li_reference.py (mpmath, 40 digits)
#pragma once

struct LiRef { int n; double re, im; int side; double vre, vim; };
inline const LiRef kLiRef[] = {
    {1, 0.29999999999999999, 0.10000000000000001, 0, 0.34657359027997263806, 0.14189705460416392836},
    {1, 0.59999999999999998, -0.40000000000000002, 0, 0.56971714159418235496, -0.78539816339744830962},
    {1, -0.90000000000000002, 0.20000000000000001, 0, -0.64736358379720008, 0.10487693873023390038},
    {1, 1.3999999999999999, 0.69999999999999996, 0, 0.21539145804622723117, 2.0899424410414195027},
    {1, -3, -2, 0, -1.4978661367769954967, -0.46364760900080611621},
    {1, 250, 13, 0, -5.5188139236316916067, 3.0894311771140772051},
    {1, 0.98999999999999999, 0.02, 0, 3.8004512297710409864, 1.1071487177940901561},
    {1, -1, 0, 0, -0.69314718055994530942, 0.0},
    {1, 1.8999999999999999, -0.01, 0, 0.1052987910728458447, -3.1304819996921857645},
    {1, -1200000, 300000, 0, -14.028145209979883291, 0.24497846704858656851},
    {1, 0.5, 1.2, 0, -0.2623642644674910205, 1.1760052070951350894},
    {2, 0.29999999999999999, 0.10000000000000001, 0, 0.32215453071190913473, 0.11864721156660094848},
    {2, 0.59999999999999998, -0.40000000000000002, 0, 0.61863881990938023526, -0.56969674922587053646},
    {2, -0.90000000000000002, 0.20000000000000001, 0, -0.75630305000816368618, 0.14243027699844134061},
    {2, 1.3999999999999999, 0.69999999999999996, 0, 1.2114218901385222223, 1.6087779233815168546},
    {2, -3, -2, 0, -2.0713071652315143212, -0.89227316790070348577},
    {2, 250, 13, 0, -12.126712484251463858, 17.063702866130397015},
    {2, 0.98999999999999999, 0.02, 0, 1.575226248231574405, 0.085964776068896890276},
    {2, -1, 0, 0, -0.82246703342411321824, 0.0},
    {2, 1.8999999999999999, -0.01, 0, 2.4482194545839841404, -2.0170412782667310648},
    {2, -1200000, 300000, 0, -100.00934402351922551, 3.4365962636286920184},
    {2, 0.5, 1.2, 0, 0.096555406231893647655, 1.2915221688212322043},
    {3, 0.29999999999999999, 0.10000000000000001, 0, 0.31070702684298542383, 0.10864340565643661984},
    {3, 0.59999999999999998, -0.40000000000000002, 0, 0.61715920973039422432, -0.47625547820311148187},
    {3, -0.90000000000000002, 0.20000000000000001, 0, -0.82135729291047658983, 0.16705170642067596265},
    {3, 1.3999999999999999, 0.69999999999999996, 0, 1.4565433702839302839, 1.1338822056029428287},
    {3, -3, -2, 0, -2.466410148606689071, -1.2712148255191350879},
    {3, 250, 13, 0, -10.79626264751572267, 47.285724902859810245},
    {3, 0.98999999999999999, 0.02, 0, 1.1852580281092497771, 0.03199968781088035472},
    {3, -1, 0, 0, -0.90154267736969571405, 0.0},
    {3, 1.8999999999999999, -0.01, 0, 2.6249760416661378209, -0.66008761746865696051},
    {3, -1200000, 300000, 0, -482.75146261468344608, 24.505056156170473632},
    {3, 0.5, 1.2, 0, 0.30264100818178650701, 1.2843464885214316905},
    {5, 0.29999999999999999, 0.10000000000000001, 0, 0.3025767097154089896, 0.10199251882025532544},
    {5, 0.59999999999999998, -0.40000000000000002, 0, 0.60568752624901032695, -0.41669960627605812535},
    {5, -0.90000000000000002, 0.20000000000000001, 0, -0.8781208419880847979, 0.19031169242184946103},
    {5, 1.3999999999999999, 0.69999999999999996, 0, 1.4420788894027745578, 0.78306828341233337989},
    {5, -3, -2, 0, -2.8470423290326744999, -1.740686242963960959},
    {5, 250, 13, 0, 56.938049267837189953, 122.42155376961400416},
    {5, 0.98999999999999999, 0.02, 0, 1.026086917447826673, 0.021622475767701151085},
    {5, -1, 0, 0, -0.97211977044690930594, 0.0},
    {5, 1.8999999999999999, -0.01, 0, 2.0683984598227467159, -0.034259512715931326216},
    {5, -1200000, 300000, 0, -5296.0009382540029076, 435.16116156601701659},
    {5, 0.5, 1.2, 0, 0.45562671379047577186, 1.2314572400668328667},
    {8, 0.29999999999999999, 0.10000000000000001, 0, 0.30031528565165442475, 0.10023849298776367319},
    {8, 0.59999999999999998, -0.40000000000000002, 0, 0.60076679544703341246, -0.4019340670866615169},
    {8, -0.90000000000000002, 0.20000000000000001, 0, -0.89708046511726272932, 0.19865938151928132318},
    {8, 1.3999999999999999, 0.69999999999999996, 0, 1.4057912254616086809, 0.7083360531151971482},
    {8, -3, -2, 0, -2.9800747669169541123, -1.9586958600856912642},
    {8, 250, 13, 0, 218.54294282810828807, 106.94915447970345173},
    {8, 0.98999999999999999, 0.02, 0, 0.99399251728016403139, 0.020165186272545157721},
    {8, -1, 0, 0, -0.99623300185264789923, 0.0},
    {8, 1.8999999999999999, -0.01, 0, 1.9154793827662413236, -0.010201096683045932116},
    {8, -1200000, 300000, 0, -57454.983238798316653, 7227.9150857356154316},
    {8, 0.5, 1.2, 0, 0.49505098497825202203, 1.2045167654548574452},
    {1, 1.5, 0, 1, 0.69314718055994530942, 3.1415926535897932385},
    {1, 1.5, 0, -1, 0.69314718055994530942, -3.1415926535897932385},
    {1, 3, 0, 1, -0.69314718055994530942, 3.1415926535897932385},
    {1, 3, 0, -1, -0.69314718055994530942, -3.1415926535897932385},
    {1, 100000, 0, 1, -11.512915464920228087, 3.1415926535897932385},
    {1, 100000, 0, -1, -11.512915464920228087, -3.1415926535897932385},
    {2, 1.5, 0, 1, 2.3743952702724802007, 1.2738062049196005309},
    {2, 1.5, 0, -1, 2.3743952702724802007, -1.2738062049196005309},
    {2, 3, 0, 1, 2.3201804233130983964, 3.4513922952232026614},
    {2, 3, 0, -1, 2.3201804233130983964, -3.4513922952232026614},
    {2, 100000, 0, 1, -62.98386824730852237, 36.168922062077324062},
    {2, 100000, 0, -1, -62.98386824730852237, -36.168922062077324062},
    {3, 1.5, 0, 1, 2.0608775073202808713, 0.25824198529328821075},
    {3, 1.5, 0, -1, 2.0608775073202808713, -0.25824198529328821075},
    {3, 3, 0, 1, 3.7421225942407316354, 1.8958709942733213939},
    {3, 3, 0, -1, 3.7421225942407316354, -1.8958709942733213939},
    {3, 100000, 0, 1, -216.45880742384405228, 208.20505192450676452},
    {3, 100000, 0, -1, -216.45880742384405228, -208.20505192450676452},
    {4, 1.5, 0, 1, 1.7347570807760620738, 0.034902704828336700263},
    {4, 1.5, 0, -1, 1.7347570807760620738, -0.034902704828336700263},
    {4, 3, 0, 1, 3.7485098910700996356, 0.69427572401269943294},
    {4, 3, 0, -1, 3.7485098910700996356, -0.69427572401269943294},
    {4, 100000, 0, 1, -511.83801108064686098, 799.0164147457008645},
    {4, 100000, 0, -1, -511.83801108064686098, -799.0164147457008645},
};

struct LhatRef { int n, s1, s2; double re, im; int side; long p, q; double vre, vim; };
inline const LhatRef kLhatRef[] = {
    {5, -1, -1, 0.04704763837362691, 0.52430897309938196, 0, -2, 3, 1598.2474983703546883, -41816.50465240042878},
    {6, -1, 1, -2.4352592626246894, -1.179592424252847, 0, -3, 1, 33712.019167075687736, -24407.006562779615701},
    {2, -1, -1, 0.92353520120304289, 0.69337622747142458, 0, -2, 1, 96.43225168685069792, 3.0552355200345873326},
    {2, 1, 1, -2.7860833172407036, 2.2773898352061064, 0, 1, -3, 37.365473664138689986, 19.250446072528994776},
    {5, -1, -1, 0.54575666080834484, -1.8280717349443985, 0, -2, 2, -736.52432963503537367, -3645.9542119971920592},
    {4, -1, 1, 0.97469719134220867, -0.25602071040265395, 0, -1, 0, -12.206090706150834801, 0.32035923148314890757},
    {6, 1, -1, -1.1083366979067006, -1.6220045903525666, 0, -1, -3, -268.87360700693425842, 168.37403425432817491},
    {2, 1, -1, -2.353181369010346, -1.254582641131571, 0, -3, -3, -116.10551787619998718, -3.3834892135294216446},
    {2, 1, 1, 2.5622528900327648, -2.6860644458239999, 0, 0, 2, -3.4586604810537594031, -10.597951029601151201},
    {5, -1, 1, 0.3974504752213468, -1.8090591976712262, 0, 2, -1, -811.26505698921347044, 12087.658559166384168},
    {4, 1, -1, -1.0044862472199125, 2.7844572995625843, 0, 3, -3, -16196.279410726024355, -2473.8669700237639764},
    {3, 1, 1, -2.9342699173140496, -0.21036092354261093, 0, 0, -2, -10.163060720681435511, 14.580425143034661737},
    {6, 1, -1, 0.053192638934451697, 2.9116884350133336, 0, 3, -2, 234216.59081181621502, 45727.330086203850598},
    {5, -1, 1, -0.6308797707815943, 2.9403134828596862, 0, -3, -1, -3600.4912831440955231, 58621.050117263690596},
    {6, -1, 1, -1.7357386713933636, -0.63435217756767415, 0, 3, 1, -254840.82489753365115, 12740.158153030140876},
    {6, 1, 1, 2.9358101850610341, -1.7205397885348646, 0, -1, -3, -920.14157806144703647, 134.03743336179210236},
    {6, -1, -1, -0.6829802659124784, -2.5543140430696081, 0, -2, 1, 4091.1157406474236782, -2142.7913799994207397},
    {3, 1, -1, -0.76977572044063081, -0.28075137165690611, 0, 1, 0, -0.010793029589884648312, 9.3150817223477189208},
    {6, 1, -1, -1.903033705327889, -2.0751880864436352, 0, -2, 3, 35950.246544054562046, -12616.60595918897882},
    {6, 1, 1, -2.0491457399983237, 0.77386365564487392, 0, 1, -2, -63.220848044040836875, 903.27960114728792672},
    {5, -1, 1, -0.47125665631585267, -2.3769619118103118, 0, -3, 1, -4904.0119248523085888, -13941.447415822742283},
    {4, 1, -1, -1.4581116100781282, 1.9423070805441167, 0, 1, 0, -102.53558814381514941, -81.004662221222746071},
    {4, 1, 1, -2.2415989535273764, -0.12420055749864911, 0, 2, 3, 5620.6814792062365535, 55.50588696654624867},
    {6, 1, -1, -1.7255985028731746, 2.4896873922934617, 0, 2, -3, 37394.768186949291396, 12802.943520036305145},
    {2, -1, -1, -0.32576688010704391, -2.6372665444047092, 0, -2, -1, 18.59111773515102464, -2.6470327595173903015},
    {4, 1, 1, -0.82712905980311469, 2.3456413798188747, 0, -1, 2, -471.99782543589701449, 29.479644917395564759},
    {6, 1, 1, 2.5415242024314786, -0.15124261780623627, 0, -1, 2, 1257.9645247294710621, -224.49893116783455809},
    {4, 1, 1, 0.59023626012434871, -2.5509980552389155, 0, -3, 2, -11208.743452495593591, 1816.8075873168683266},
    {4, -1, 1, 2.996145758290532, -2.5484225994456966, 0, 1, -1, -587.02808587743450882, -137.14418973722825362},
    {2, 1, -1, -0.88899542011647759, 1.1108757320021887, 0, -3, 3, 167.59885495598750751, -9.7211553837116047964},
    {5, 1, -1, 0.43684499030705659, 0.74976327995651548, 0, 0, 0, 1.0176365902890821084, 0.0088953321718066950756},
    {6, 1, 1, -2.5187878270157382, 0.836425875823811, 0, -1, 0, 0.29945246210937752974, -1.7052462478045635391},
    {4, -1, -1, -0.35686502772768325, 2.0302201751434126, 0, -3, 1, -10916.687636966184292, 1081.1683541418574998},
    {6, 1, -1, 0.60771158729786734, -0.1142591079045534, 0, -2, 2, 30157.361526077898553, 2258.8562126869388165},
    {2, -1, -1, -1.4650186793617106, -2.9321567698738864, 0, -1, -2, 22.375189991908522397, 4.7969232008702630306},
    {6, 1, 1, 1.5226277368838304, -0.94485436409756574, 0, 0, 0, 1.0175122154605382605, 0.0013012109663980486496},
    {3, -1, -1, 0.99539437520202823, -1.8089653268081043, 0, 0, 3, -9.1685317501690941601, 52.805681453302903805},
    {3, 1, -1, -1.6825353391569626, 2.5248204015114979, 0, -2, -2, 2.1689262890432925108, -857.11166953487541437},
    {3, -1, -1, 2.0225737048232366, 2.0923218298214277, 0, 2, -3, 100.90587395163826938, 98.702508408397949263},
    {4, 1, 1, -0.29610329249419198, -1.3490230623305499, 0, -2, 3, -4160.8422385120238276, 473.12310186490392098},
    {3, -1, -1, 0.40000000000000002, 0, 1, 1, 0, 2.3114395255462324182, 240.93033159588164628},
    {3, -1, -1, 0.40000000000000002, 0, -1, 1, 2, 12.982853433472928038, 381.7219513043469169},
    {4, 1, -1, 2.5, 0, 1, -2, 1, -739.81177840433594917, 226.12290063695585057},
    {2, -1, 1, -0.69999999999999996, 0, -1, 0, 3, -59.917415709723810593, 3.3615821507924195799},
    {5, -1, -1, -2, 0, 1, 2, -1, -988.00450368426146071, -14750.041235180478275},
};
