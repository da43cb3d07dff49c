// (z, rho, beta, W) from a 60+ digit series evaluation
pub const WRIGHT_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (-0.5, -0.05, 1.0, 6.155325249899476825e-1),
    (-0.5, -0.05, 0.95, 5.9802233138130997759e-1),
    (-0.5, -0.05, 0.9, 5.7853187370661111808e-1),
    (-0.5, -0.05, 0.3, 2.2050419323859290917e-1),
    (-0.5, -0.05, -0.4, -1.5946265545533867238e-1),
    (-0.5, -0.05, 1.7, 6.6419004975267499035e-1),
    (-2.0, -0.05, 1.0, 1.4270378082700854206e-1),
    (-2.0, -0.05, 0.95, 1.3946617048679974329e-1),
    (-2.0, -0.05, 0.9, 1.3577915675616332828e-1),
    (-2.0, -0.05, 0.3, 6.1105419788743960081e-2),
    (-2.0, -0.05, -0.4, -3.2037175215597215571e-2),
    (-2.0, -0.05, 1.7, 1.4555069222132392481e-1),
    (-4.0, -0.05, 1.0, 2.0067405796405725553e-2),
    (-4.0, -0.05, 0.95, 1.9750942436157149067e-2),
    (-4.0, -0.05, 0.9, 1.9373886088831062086e-2),
    (-4.0, -0.05, 0.3, 1.0386233423574828482e-2),
    (-4.0, -0.05, -0.4, -3.3261113403028288241e-3),
    (-4.0, -0.05, 1.7, 1.9098957000910272066e-2),
    (-7.5, -0.05, 1.0, 6.2840906966778175589e-4),
    (-7.5, -0.05, 0.95, 6.2507853650313421652e-4),
    (-7.5, -0.05, 0.9, 6.2004109782997200448e-4),
    (-7.5, -0.05, 0.3, 4.1803626914640593726e-4),
    (-7.5, -0.05, -0.4, -2.0503672610767086652e-5),
    (-7.5, -0.05, 1.7, 5.3692517715844102451e-4),
    (-12.0, -0.05, 1.0, 6.9657051295210557588e-6),
    (-12.0, -0.05, 0.95, 7.0069518756474239655e-6),
    (-12.0, -0.05, 0.9, 7.0326161038895103728e-6),
    (-12.0, -0.05, 0.3, 5.8683745284539814618e-6),
    (-12.0, -0.05, -0.4, 1.2996667869730206947e-6),
    (-12.0, -0.05, 1.7, 5.2813974495783657576e-6),
    (-20.0, -0.05, 1.0, 2.08580243692872938e-9),
    (-20.0, -0.05, 0.95, 2.1312126880281820936e-9),
    (-20.0, -0.05, 0.9, 2.1739871008408762693e-9),
    (-20.0, -0.05, 0.3, 2.3622889567423153244e-9),
    (-20.0, -0.05, -0.4, 1.4292298055431326603e-9),
    (-20.0, -0.05, 1.7, 1.3278783101458956046e-9),
    (-33.0, -0.05, 1.0, 3.1161640781794385258e-15),
    (-33.0, -0.05, 0.95, 3.2436167105938658179e-15),
    (-33.0, -0.05, 0.9, 3.3723645048923910473e-15),
    (-33.0, -0.05, 0.3, 4.8571659373678364505e-15),
    (-33.0, -0.05, -0.4, 5.3956888528144595332e-15),
    (-33.0, -0.05, 1.7, 1.5943928651528370691e-15),
    (-50.0, -0.05, 1.0, 5.4677815307318451985e-23),
    (-50.0, -0.05, 0.95, 5.7912361790315987794e-23),
    (-50.0, -0.05, 0.9, 6.1287680836589558526e-23),
    (-50.0, -0.05, 0.3, 1.127673606673543798e-22),
    (-50.0, -0.05, -0.4, 1.8848771555961482909e-22),
    (-50.0, -0.05, 1.7, 2.2582029959897360458e-23),
    (-0.5, -0.15, 1.0, 6.3506673790282767109e-1),
    (-0.5, -0.15, 0.85, 5.8234140736140826336e-1),
    (-0.5, -0.15, 0.7, 5.1189089481950495229e-1),
    (-0.5, -0.15, 0.3, 2.5616454744951871953e-1),
    (-0.5, -0.15, -0.4, -1.5531233819017457031e-1),
    (-0.5, -0.15, 1.7, 6.584347640835712232e-1),
    (-2.0, -0.15, 1.0, 1.5473936964907633199e-1),
    (-2.0, -0.15, 0.85, 1.4918324718747369412e-1),
    (-2.0, -0.15, 0.7, 1.3942329214743750194e-1),
    (-2.0, -0.15, 0.3, 9.3277432828716524137e-2),
    (-2.0, -0.15, -0.4, -1.8085473148919732229e-2),
    (-2.0, -0.15, 1.7, 1.3691910770639418113e-1),
    (-4.0, -0.15, 1.0, 2.1343052224931989882e-2),
    (-4.0, -0.15, 0.85, 2.1665309054815816315e-2),
    (-4.0, -0.15, 0.7, 2.1502416507525053618e-2),
    (-4.0, -0.15, 0.3, 1.8241508672886019916e-2),
    (-4.0, -0.15, -0.4, 3.5489464630615630568e-3),
    (-4.0, -0.15, 1.7, 1.5847892786103810553e-2),
    (-7.5, -0.15, 1.0, 5.3829956086367902372e-4),
    (-7.5, -0.15, 0.85, 5.8379147243499078082e-4),
    (-7.5, -0.15, 0.7, 6.2382894497812253436e-4),
    (-7.5, -0.15, 0.3, 6.8297131174384498844e-4),
    (-7.5, -0.15, -0.4, 4.9647564966910291467e-4),
    (-7.5, -0.15, 1.7, 3.1378865939438349932e-4),
    (-12.0, -0.15, 1.0, 3.4865401450373991651e-6),
    (-12.0, -0.15, 0.85, 4.0173826548130419752e-6),
    (-12.0, -0.15, 0.7, 4.5829524365949988707e-6),
    (-12.0, -0.15, 0.3, 6.1623060359235022668e-6),
    (-12.0, -0.15, -0.4, 8.0374765035592833211e-6),
    (-12.0, -0.15, 1.7, 1.6041877839741412512e-6),
    (-20.0, -0.15, 1.0, 2.3767462201316913942e-10),
    (-20.0, -0.15, 0.85, 2.9499710213250936546e-10),
    (-20.0, -0.15, 0.7, 3.6389552639918489538e-10),
    (-20.0, -0.15, 0.3, 6.1657803417047312718e-10),
    (-20.0, -0.15, -0.4, 1.3598125580211381904e-9),
    (-20.0, -0.15, 1.7, 8.0506741545541312406e-11),
    (-33.0, -0.15, 1.0, 1.1571184606822952774e-17),
    (-33.0, -0.15, 0.85, 1.5541950194650119939e-17),
    (-33.0, -0.15, 0.7, 2.0798950754959807365e-17),
    (-33.0, -0.15, 0.3, 4.4395713218021098853e-17),
    (-33.0, -0.15, -0.4, 1.5583081538331867228e-16),
    (-33.0, -0.15, 1.7, 2.7898568941243461161e-18),
    (-50.0, -0.15, 1.0, 5.979226463288650139e-28),
    (-50.0, -0.15, 0.85, 8.6007626231963456534e-28),
    (-50.0, -0.15, 0.7, 1.2342898419714502668e-27),
    (-50.0, -0.15, 0.3, 3.1965289184763961941e-27),
    (-50.0, -0.15, -0.4, 1.6185773177233538046e-26),
    (-50.0, -0.15, 1.7, 1.0639786056498896034e-28),
    (-0.5, -0.25, 1.0, 6.5680039448252141683e-1),
    (-0.5, -0.25, 0.75, 5.6796881884076957626e-1),
    (-0.5, -0.25, 0.5, 4.2985089917044335088e-1),
    (-0.5, -0.25, 0.3, 2.9232706154304037429e-1),
    (-0.5, -0.25, -0.4, -1.5513989566982289155e-1),
    (-0.5, -0.25, 1.7, 6.5381874056833941105e-1),
    (-2.0, -0.25, 1.0, 1.6285047571988361059e-1),
    (-2.0, -0.25, 0.75, 1.6125108345458585591e-1),
    (-2.0, -0.25, 0.5, 1.4739544373991729793e-1),
    (-2.0, -0.25, 0.3, 1.2662801143015191097e-1),
    (-2.0, -0.25, -0.4, 4.5018558515805733394e-3),
    (-2.0, -0.25, 1.7, 1.2548973198923352968e-1),
    (-4.0, -0.25, 1.0, 1.9545860276103569127e-2),
    (-4.0, -0.25, 0.75, 2.1989963340478358643e-2),
    (-4.0, -0.25, 0.5, 2.3552723668241498694e-2),
    (-4.0, -0.25, 0.3, 2.3819966446603356667e-2),
    (-4.0, -0.25, -0.4, 1.462542129170742282e-2),
    (-4.0, -0.25, 1.7, 1.151989902457552717e-2),
    (-7.5, -0.25, 1.0, 2.718542934886168039e-4),
    (-7.5, -0.25, 0.75, 3.5602679962488864622e-4),
    (-7.5, -0.25, 0.5, 4.5367733409108721063e-4),
    (-7.5, -0.25, 0.3, 5.3865265357218746623e-4),
    (-7.5, -0.25, -0.4, 8.0419143157277717653e-4),
    (-7.5, -0.25, 1.7, 1.1302415818176418418e-4),
    (-12.0, -0.25, 1.0, 4.878482647013488184e-7),
    (-12.0, -0.25, 0.75, 7.2843171702102135996e-7),
    (-12.0, -0.25, 0.5, 1.0699699824270143201e-6),
    (-12.0, -0.25, 0.3, 1.4369394093284612795e-6),
    (-12.0, -0.25, -0.4, 3.641156274194930348e-6),
    (-12.0, -0.25, 1.7, 1.4687104242977542296e-7),
    (-20.0, -0.25, 1.0, 1.1155187769601915806e-12),
    (-20.0, -0.25, 0.75, 1.9429889447659160479e-12),
    (-20.0, -0.25, 0.5, 3.3541386376534849298e-12),
    (-20.0, -0.25, 0.3, 5.1565294860658602037e-12),
    (-20.0, -0.25, -0.4, 2.2088021591288599537e-11),
    (-20.0, -0.25, 1.7, 2.2560284970981809941e-13),
    (-33.0, -0.25, 1.0, 2.1267888498976270436e-23),
    (-33.0, -0.25, 0.75, 4.3393418494400144463e-23),
    (-33.0, -0.25, 0.5, 8.8114914626714401134e-23),
    (-33.0, -0.25, 0.3, 1.5474741576382368335e-22),
    (-33.0, -0.25, -0.4, 1.0827698761299250851e-21),
    (-33.0, -0.25, 1.7, 2.8179013136463817244e-24),
    (-50.0, -0.25, 1.0, 1.3563522249208424134e-39),
    (-50.0, -0.25, 0.75, 3.165638690632762533e-39),
    (-50.0, -0.25, 0.5, 7.3677610082526095636e-39),
    (-50.0, -0.25, 0.3, 1.4452697231793098747e-38),
    (-50.0, -0.25, -0.4, 1.5057645483554302913e-37),
    (-50.0, -0.25, 1.7, 1.2456622116594141958e-40),
    (-0.5, -0.35, 1.0, 6.8108577533498018579e-1),
    (-0.5, -0.35, 0.65, 5.5397132011706777704e-1),
    (-0.5, -0.35, 0.30000000000000004, 3.2941491487009848467e-1),
    (-0.5, -0.35, 0.3, 3.2941491487009844336e-1),
    (-0.5, -0.35, -0.4, -1.5983354527333465773e-1),
    (-0.5, -0.35, 1.7, 6.503088239288961673e-1),
    (-2.0, -0.35, 1.0, 1.6612155233677260541e-1),
    (-2.0, -0.35, 0.65, 1.7646113560839999813e-1),
    (-2.0, -0.35, 0.30000000000000004, 1.6167500891601146997e-1),
    (-2.0, -0.35, 0.3, 1.6167500891601146517e-1),
    (-2.0, -0.35, -0.4, 3.9463730967378412355e-2),
    (-2.0, -0.35, 1.7, 1.1075671357919013486e-1),
    (-4.0, -0.35, 1.0, 1.478532234509243292e-2),
    (-4.0, -0.35, 0.65, 1.9956404559270085538e-2),
    (-4.0, -0.35, 0.30000000000000004, 2.4958477336286426387e-2),
    (-4.0, -0.35, 0.3, 2.4958477336286427094e-2),
    (-4.0, -0.35, -0.4, 2.7523689767165861011e-2),
    (-4.0, -0.35, 1.7, 6.8224006558285037364e-3),
    (-7.5, -0.35, 1.0, 6.1107594831842059844e-5),
    (-7.5, -0.35, 0.65, 1.0834987750580132755e-4),
    (-7.5, -0.35, 0.30000000000000004, 1.8537587377487098338e-4),
    (-7.5, -0.35, 0.3, 1.853758737748709986e-4),
    (-7.5, -0.35, -0.4, 4.768339632320754826e-4),
    (-7.5, -0.35, 1.7, 1.7725495302976749716e-5),
    (-12.0, -0.35, 1.0, 7.3342226740299727637e-9),
    (-12.0, -0.35, 0.65, 1.6326547397422405902e-8),
    (-12.0, -0.35, 0.30000000000000004, 3.5665264334637171503e-8),
    (-12.0, -0.35, 0.3, 3.5665264334637175867e-8),
    (-12.0, -0.35, -0.4, 1.5990279647053650872e-7),
    (-12.0, -0.35, 1.7, 1.405190831181852666e-9),
    (-20.0, -0.35, 1.0, 8.7041191547446040115e-18),
    (-20.0, -0.35, 0.65, 2.5143930336179906922e-17),
    (-20.0, -0.35, 0.30000000000000004, 7.1981646053981074805e-17),
    (-20.0, -0.35, 0.3, 7.198164605398108676e-17),
    (-20.0, -0.35, -0.4, 5.7342862991609708419e-16),
    (-20.0, -0.35, 1.7, 1.0163693410533270252e-18),
    (-33.0, -0.35, 1.0, 1.2324526909459471985e-36),
    (-33.0, -0.35, 0.65, 4.6301614433870336265e-36),
    (-33.0, -0.35, 0.30000000000000004, 1.7320656185840623148e-35),
    (-33.0, -0.35, 0.3, 1.7320656185840626767e-35),
    (-33.0, -0.35, -0.4, 2.3922338985070556787e-34),
    (-33.0, -0.35, 1.7, 8.6230956540854774587e-38),
    (-50.0, -0.35, 1.0, 6.6057816648289319687e-68),
    (-50.0, -0.35, 0.65, 3.0950694224673821319e-67),
    (-50.0, -0.35, 0.30000000000000004, 1.4468598474501137937e-66),
    (-50.0, -0.35, 0.3, 1.4468598474501141473e-66),
    (-50.0, -0.35, -0.4, 3.1400258487705208427e-65),
    (-50.0, -0.35, 1.7, 2.9887913212488207442e-69),
    (-0.5, -0.45, 1.0, 7.0851141082673177716e-1),
    (-0.5, -0.45, 0.55, 5.3879977521745009979e-1),
    (-0.5, -0.45, 0.09999999999999998, 2.0548903007642146729e-1),
    (-0.5, -0.45, 0.3, 3.6787614237708828641e-1),
    (-0.5, -0.45, -0.4, -1.7114447334855713631e-1),
    (-0.5, -0.45, 1.7, 6.4792938651948219949e-1),
    (-2.0, -0.45, 1.0, 1.6264357014054731302e-1),
    (-2.0, -0.45, 0.55, 1.9591298983810570987e-1),
    (-2.0, -0.45, 0.09999999999999998, 1.8716334486169726455e-1),
    (-2.0, -0.45, 0.3, 1.9834766389025492528e-1),
    (-2.0, -0.45, -0.4, 9.4623225458926355017e-2),
    (-2.0, -0.45, 1.7, 9.2075957010652179403e-2),
    (-4.0, -0.45, 1.0, 8.0234179270516400865e-3),
    (-4.0, -0.45, 0.55, 1.447005855176308702e-2),
    (-4.0, -0.45, 0.09999999999999998, 2.3713634652589949741e-2),
    (-4.0, -0.45, 0.3, 1.9298480851624919164e-2),
    (-4.0, -0.45, -0.4, 3.5187359378331470601e-2),
    (-4.0, -0.45, 1.7, 2.7701069374622948747e-3),
    (-7.5, -0.45, 1.0, 2.4310162455650981986e-6),
    (-7.5, -0.45, 0.55, 6.8489319481634894967e-6),
    (-7.5, -0.45, 0.09999999999999998, 1.8609829112649276388e-5),
    (-7.5, -0.45, 0.3, 1.1990909483598864059e-5),
    (-7.5, -0.45, -0.4, 5.3867490076108745151e-5),
    (-7.5, -0.45, 1.7, 4.5529802839214707487e-7),
    (-12.0, -0.45, 1.0, 4.632711270202062781e-13),
    (-12.0, -0.45, 0.55, 1.8748897089062232944e-12),
    (-12.0, -0.45, 0.09999999999999998, 7.4649237754344454901e-12),
    (-12.0, -0.45, 0.3, 4.0479519945585926517e-12),
    (-12.0, -0.45, -0.4, 3.3960016454820052407e-11),
    (-12.0, -0.45, 1.7, 5.1061150767914987341e-14),
    (-20.0, -0.45, 1.0, 1.0589415990692251965e-30),
    (-20.0, -0.45, 0.55, 6.4391073148678299605e-30),
    (-20.0, -0.45, 0.09999999999999998, 3.8895116086333254923e-29),
    (-20.0, -0.45, 0.3, 1.7503024540263986656e-29),
    (-20.0, -0.45, -0.4, 2.8463713557114791918e-28),
    (-20.0, -0.45, 1.7, 6.3065894898412349191e-32),
    (-33.0, -0.45, 1.0, 9.8338702348268433415e-74),
    (-33.0, -0.45, 0.55, 8.9684112815510226525e-73),
    (-33.0, -0.45, 0.09999999999999998, 8.1570313228535812102e-72),
    (-33.0, -0.45, 0.3, 3.0587012200407074255e-72),
    (-33.0, -0.45, -0.4, 9.4513537929657869191e-71),
    (-33.0, -0.45, 1.7, 3.1411911406854235297e-75),
    (-50.0, -0.45, 1.0, 8.6738508778040010346e-155),
    (-50.0, -0.45, 0.55, 1.1095810051583682689e-153),
    (-50.0, -0.45, 0.09999999999999998, 1.4175941894065292633e-152),
    (-50.0, -0.45, 0.3, 4.5697274773954398698e-153),
    (-50.0, -0.45, -0.4, 2.4000742392458646373e-151),
    (-50.0, -0.45, 1.7, 1.6413385018047261457e-156),
    (-0.5, -0.5, 1.0, 7.2367360983176306701e-1),
    (-0.5, -0.5, 0.5, 5.3000706468805712175e-1),
    (-0.5, -0.5, 0.0, 1.3250176617201428044e-1),
    (-0.5, -0.5, 0.3, 3.8775175986983444381e-1),
    (-0.5, -0.5, -0.4, -1.8019247017765507844e-1),
    (-0.5, -0.5, 1.7, 6.4719456517961689121e-1),
    (-2.0, -0.5, 1.0, 1.5729920705028513066e-1),
    (-2.0, -0.5, 0.5, 2.0755374871029735167e-1),
    (-2.0, -0.5, 0.0, 2.0755374871029735167e-1),
    (-2.0, -0.5, 0.3, 2.1676118667817536711e-1),
    (-2.0, -0.5, -0.4, 1.3442004495853459748e-1),
    (-2.0, -0.5, 1.7, 8.1032750747410931848e-2),
    (-4.0, -0.5, 1.0, 4.6777349810472658379e-3),
    (-4.0, -0.5, 0.5, 1.0333492677046026929e-2),
    (-4.0, -0.5, 0.0, 2.0666985354092053857e-2),
    (-4.0, -0.5, 0.3, 1.3819161261357703159e-2),
    (-4.0, -0.5, -0.4, 3.2766355744309339634e-2),
    (-4.0, -0.5, 1.7, 1.3540192899146741688e-3),
    (-7.5, -0.5, 1.0, 1.1372725656979665326e-7),
    (-7.5, -0.5, 0.5, 4.4071609561590198328e-7),
    (-7.5, -0.5, 0.0, 1.6526853585596324373e-6),
    (-7.5, -0.5, 0.3, 7.5085837360137576654e-7),
    (-7.5, -0.5, -0.4, 4.6363464390764081476e-6),
    (-7.5, -0.5, 1.7, 1.6238077077103806991e-8),
    (-12.0, -0.5, 1.0, 2.1519736712498913117e-17),
    (-12.0, -0.5, 0.5, 1.3086506196246324146e-16),
    (-12.0, -0.5, 0.0, 7.8519037177477944877e-16),
    (-12.0, -0.5, 0.3, 2.6840918630690644783e-16),
    (-12.0, -0.5, -0.4, 3.2593782161570488698e-15),
    (-12.0, -0.5, 1.7, 1.6821540030455930908e-18),
    (-20.0, -0.5, 1.0, 2.088487583762544757e-45),
    (-20.0, -0.5, 0.5, 2.098828115677208445e-44),
    (-20.0, -0.5, 0.0, 2.098828115677208445e-43),
    (-20.0, -0.5, 0.3, 5.275164849777098215e-44),
    (-20.0, -0.5, -0.4, 1.3195050606704291304e-42),
    (-20.0, -0.5, 1.7, 8.1900032832904291751e-47),
    (-33.0, -0.5, 1.0, 1.9791305755532679721e-120),
    (-33.0, -0.5, 0.5, 3.2715409857365848896e-119),
    (-33.0, -0.5, 0.0, 5.3980426264653650678e-118),
    (-33.0, -0.5, 0.3, 1.004249127448679237e-118),
    (-33.0, -0.5, -0.4, 5.0774876365531357527e-117),
    (-33.0, -0.5, 1.7, 3.8865090760547781604e-122),
    (-50.0, -0.5, 1.0, 8.300172571196522752e-274),
    (-50.0, -0.5, 0.5, 2.0767005318199483656e-272),
    (-50.0, -0.5, 0.0, 5.191751329549870914e-271),
    (-50.0, -0.5, 0.3, 7.5264734374345271574e-272),
    (-50.0, -0.5, -0.4, 6.8142125502223082824e-270),
    (-50.0, -0.5, 1.7, 9.1391270210576465473e-276),
    (-0.5, -0.4995, 1.0, 7.2351650541420328621e-1),
    (-0.5, -0.4995, 0.5005, 5.3010110999448779092e-1),
    (-0.5, -0.4995, 0.0010000000000000009, 1.3327319129061479928e-1),
    (-0.5, -0.4995, 0.3, 3.8755066819588651257e-1),
    (-0.5, -0.4995, -0.4, -1.8008825517355952471e-1),
    (-0.5, -0.4995, 1.7, 6.4720030556375899842e-1),
    (-2.0, -0.4995, 1.0, 1.5736773377316251513e-1),
    (-2.0, -0.4995, 0.5005, 2.0743085926731334991e-1),
    (-2.0, -0.4995, 0.0010000000000000009, 2.0731228890366687497e-1),
    (-2.0, -0.4995, 0.3, 2.1657956859757307025e-1),
    (-2.0, -0.4995, -0.4, 1.3396737187524581975e-1),
    (-2.0, -0.4995, 1.7, 8.1149194229409014019e-2),
    (-4.0, -0.4995, 1.0, 4.7086478305890122913e-3),
    (-4.0, -0.4995, 0.5005, 1.0378150589260269927e-2),
    (-4.0, -0.4995, 0.0010000000000000009, 2.0709347668728373894e-2),
    (-4.0, -0.4995, 0.3, 1.3879979125301162122e-2),
    (-4.0, -0.4995, -0.4, 3.2820849759786296673e-2),
    (-4.0, -0.4995, 1.7, 1.3655683290551742489e-3),
    (-7.5, -0.4995, 1.0, 1.1822727313469727352e-7),
    (-7.5, -0.4995, 0.5005, 4.5652675949520882905e-7),
    (-7.5, -0.4995, 0.0010000000000000009, 1.7058159493127585329e-6),
    (-7.5, -0.4995, 0.3, 7.7811936688144919237e-7),
    (-7.5, -0.4995, -0.4, 4.7884454152612022247e-6),
    (-7.5, -0.4995, 1.7, 1.6930505199809007578e-8),
    (-12.0, -0.4995, 1.0, 2.4528158286343149547e-17),
    (-12.0, -0.4995, 0.5005, 1.4848532393694882726e-16),
    (-12.0, -0.4995, 0.0010000000000000009, 8.8685455735035313636e-16),
    (-12.0, -0.4995, 0.3, 3.0475762584471931716e-16),
    (-12.0, -0.4995, -0.4, 3.6861100770970719593e-15),
    (-12.0, -0.4995, 1.7, 1.9244951545290530176e-18),
    (-20.0, -0.4995, 1.0, 3.3138721571718424294e-45),
    (-20.0, -0.4995, 0.5005, 3.3117599039177338149e-44),
    (-20.0, -0.4995, 0.0010000000000000009, 3.2932854407351470424e-43),
    (-20.0, -0.4995, 0.3, 8.3319267431999648291e-44),
    (-20.0, -0.4995, -0.4, 2.0744471078951658713e-42),
    (-20.0, -0.4995, 1.7, 1.3054481722606534709e-46),
    (-33.0, -0.4995, 1.0, 9.0822232521545764178e-120),
    (-33.0, -0.4995, 0.5005, 1.4914488006081462597e-118),
    (-33.0, -0.4995, 0.0010000000000000009, 2.4447075615114956847e-117),
    (-33.0, -0.4995, 0.3, 4.5840992737424532863e-118),
    (-33.0, -0.4995, -0.4, 2.3053981507669386758e-116),
    (-33.0, -0.4995, 1.7, 1.7929675350111270964e-121),
    (-50.0, -0.4995, 1.0, 4.5762189459184221818e-272),
    (-50.0, -0.4995, 0.5005, 1.1364989755760161807e-270),
    (-50.0, -0.4995, 0.0010000000000000009, 2.8202179747525993468e-269),
    (-50.0, -0.4995, 0.3, 4.1252567541976997898e-270),
    (-50.0, -0.4995, -0.4, 3.712870782160385257e-268),
    (-50.0, -0.4995, 1.7, 5.0685014075357940039e-274),
    (0.7, -0.05, 1.0, 1.9691809922284944111),
    (0.7, -0.05, 0.4, 8.258360281295439471e-1),
    (0.7, -0.05, 1.6, 2.2607416530092247784),
    (3.0, -0.05, 1.0, 1.7964191426867079349e+1),
    (3.0, -0.05, 0.4, 5.5588855295483482329),
    (3.0, -0.05, 1.6, 2.2594429436884939778e+1),
    (6.0, -0.05, 1.0, 3.0780055354189978197e+2),
    (6.0, -0.05, 0.4, 4.4903715692711824293e+1),
    (6.0, -0.05, 1.6, 4.4578468148664878285e+2),
    (10.0, -0.05, 1.0, 1.2279621530806811935e+4),
    (10.0, -0.05, 0.4, -1.6272888366121623535e+3),
    (10.0, -0.05, 1.6, 2.2795869683544821426e+4),
    (0.7, -0.25, 1.0, 1.7248929882610158105),
    (0.7, -0.25, 0.4, 5.2310986695586021109e-1),
    (0.7, -0.25, 1.6, 2.2208731347232709688),
    (3.0, -0.25, 1.0, 6.461770882339106955),
    (3.0, -0.25, 0.4, -1.486984696257154562),
    (3.0, -0.25, 1.6, 1.6312416665721141527e+1),
    (6.0, -0.25, 1.0, -1.9371453384229580699),
    (6.0, -0.25, 0.4, 2.4423173941495935967),
    (6.0, -0.25, 1.6, 1.0418300343178940791e+2),
    (10.0, -0.25, 1.0, 8.1456490289678494157e+1),
    (10.0, -0.25, 0.4, -1.6526351110538032826e+2),
    (10.0, -0.25, 1.6, 3.069384365101491504e+2),
    (0.7, -0.5, 1.0, 1.3793820535623102981),
    (0.7, -0.5, 0.4, 3.2879241081855645106e-1),
    (0.7, -0.5, 1.6, 2.0227419980947964879),
    (3.0, -0.5, 1.0, 1.9661051464753107271),
    (3.0, -0.5, 0.4, -7.0526730719459534239e-2),
    (3.0, -0.5, 1.6, 6.9980372462046545672),
    (6.0, -0.5, 1.0, 1.9999779095030014146),
    (6.0, -0.5, 0.4, -4.3746143654932689644e-2),
    (6.0, -0.5, 1.6, 1.5691282713409181837e+1),
    (10.0, -0.5, 1.0, 1.9999999999984625402),
    (10.0, -0.5, 0.4, -2.2293759533542717136e-2),
    (10.0, -0.5, 1.6, 2.8838659988582778809e+1),
];
