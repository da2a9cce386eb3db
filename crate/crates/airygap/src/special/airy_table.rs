// Ai and Ai' anchor values on [-50, 12] at spacing 1/2.
pub(crate) const ANCHOR_LO: f64 = -50.0;
pub(crate) const ANCHOR_STEP: f64 = 0.5;
pub(crate) const ANCHORS: [(f64, f64); 125] = [
    (-0.16188142361232092, 0.96898983727674909),
    (0.098753963510335829, -1.3249329151788826),
    (-0.024574352433504486, 1.4826359115282209),
    (-0.049565715037936717, -1.4485723378435848),
    (0.11485270243081170, 1.2544490671704189),
    (-0.16549597096809926, -0.94576539375558976),
    (0.19876055594278859, 0.57153919642550459),
    (-0.21451581761792563, -0.17662004942214383),
    (0.21453698834306154, -0.20298561667620671),
    (-0.20175568795492216, 0.54205001713286716),
    (0.17959297114909895, -0.82596824806465498),
    (-0.15144566358592272, 1.0492679073901942),
    (0.12034596079976021, -1.2134710085839718),
    (-0.088780110694933849, 1.3248340966296405),
    (0.058633798114259369, -1.3923077995953977),
    (-0.031226132889100254, 1.4258913862171006),
    (0.0073966066776826546, -1.4354316307445705),
    (0.012383893387559860, 1.4298326154771349),
    (-0.027898913373551656, -1.4165986848013592),
    (0.039082602795827106, 1.4016171661778448),
    (-0.045933923437957250, -1.3890908752607184),
    (0.048452702411675609, 1.3815446797227825),
    (-0.046599240593965979, -1.3798498353709644),
    (0.040278535418040425, 1.3832312089257071),
    (-0.029350485958847702, -1.3892446322047828),
    (0.013668155455244661, 1.3937345616095672),
    (0.0068533769086817028, -1.3908065137632245),
    (-0.032135597508976890, 1.3728745787906121),
    (0.061803044040273791, -1.3308704139477108),
    (-0.095023462052427118, 1.2547226635987462),
    (0.13033638994602217, -1.1342272299930086),
    (-0.16549800021463302, 0.96041731347148949),
    (0.19738649964225485, -0.72749163241921002),
    (-0.22202972961870152, 0.43525197893490873),
    (0.23482951883019736, -0.091823453011645983),
    (-0.23105718864002575, -0.28381759619202619),
    (0.20666975364420323, 0.66027365197058471),
    (-0.15943432966207784, -0.99414124172570480),
    (0.090240760628866580, 1.2335439506812998),
    (-0.0043336372887428654, -1.3256903303662555),
    (-0.087968188456842163, 1.2286206026374851),
    (0.17161453239606635, -0.92593153437907281),
    (-0.22876019353937841, 0.44135314114626334),
    (0.24256293131365945, 0.15196260335015472),
    (-0.20253010076618451, -0.73380335629487198),
    (0.11023300525998052, 1.1564575976664856),
    (0.016723409398809680, -1.2829852697010064),
    (-0.14512510610568937, 1.0380925839092596),
    (0.23314283498427382, -0.45581131205669691),
    (-0.24407246181912133, -0.29955061147614896),
    (0.16352657883042947, 0.96237885138769741),
    (-0.012926044703241093, -1.2537174187587191),
    (-0.14983659008188653, 1.0086744076771970),
    (0.24904892692121110, -0.28967206432050399),
    (-0.22693405337408288, -0.58733509004493979),
    (0.081723500904036646, 1.1669360550027304),
    (0.11614415376051413, -1.0924127512708337),
    (-0.25038504298749525, 0.35490253223925328),
    (0.22635849367898897, 0.62129444990892707),
    (-0.044625680397011910, -1.1839330197051475),
    (-0.17640612707798469, 0.89286285673647124),
    (0.26780027210258395, 0.087741088343757136),
    (-0.14166127688042266, -1.0049611250051396),
    (-0.11208853977554048, 1.0646439622797084),
    (0.27120454080441422, -0.15903891520496802),
    (-0.17266059066222627, -0.90240492048084169),
    (-0.10526230029095239, 1.0586845766446601),
    (0.27886848056055084, -0.094622579963532140),
    (-0.14305793166909970, -0.97476444162127272),
    (-0.16644795409041977, 0.90493793543021220),
    (0.27821749087082893, 0.27237420430864202),
    (-0.030597418939551423, -1.0953212728805392),
    (-0.26598348278407780, 0.44302487700284364),
    (0.19098124329622029, 0.82643275142525424),
    (0.17151043937053704, -0.87151967787995337),
    (-0.27627456138116025, -0.41933133041950516),
    (-0.066555175054373129, 1.0231104533679707),
    (0.30542297004359266, 0.087724154321784443),
    (-0.0087595892557023813, -1.0273278736645794),
    (-0.31192603505105060, 0.090957487390681673),
    (0.040241238486443191, 0.99626504413279006),
    (0.31910324771912820, -0.10809531881187124),
    (-0.022133721547341404, -0.97566398092633159),
    (-0.33029023763020888, -0.032313348284639136),
    (-0.052705050356386203, 0.93556093819830655),
    (0.32177571638064788, 0.31880950669855460),
    (0.18428083525050564, -0.77100816841012655),
    (-0.23802030199711580, -0.67495249251320217),
    (-0.32914517362982311, 0.34593548728134289),
    (0.017781541276574976, 0.86419721777139839),
    (0.35076100902411432, 0.32719281855444314),
    (0.29215278105595947, -0.52336253231574770),
    (-0.070265532949289515, -0.79062857536858138),
    (-0.37553382314043191, -0.34344343345404815),
    (-0.37881429367765807, 0.31458376921659881),
    (-0.11232506769296609, 0.67885273426479436),
    (0.22740742820168558, 0.61825902074169104),
    (0.46425657774886941, 0.30918696720241042),
    (0.53556088329235212, -0.010160567116645209),
    (0.47572809161053959, -0.20408167033954739),
    (0.35502805388781724, -0.25881940379280680),
    (0.23169360648083349, -0.22491053266468389),
    (0.13529241631288142, -0.15914744129679321),
    (0.071749497008105410, -0.097382012842301319),
    (0.034924130423274379, -0.053090384433653632),
    (0.015725923380470490, -0.026250881035903230),
    (0.0065911393574607191, -0.011912976705951318),
    (0.0025840987869896350, -0.0050044139679525828),
    (0.00095156385120480187, -0.0019586409502041789),
    (0.00033025032351430898, -0.00071786656755750889),
    (0.00010834442813607442, -0.00024741389086846248),
    (3.3685311908599814e-5, -8.0463391305565143e-5),
    (9.9476943602528896e-6, -2.4765200397034955e-5),
    (2.7958823432049136e-6, -7.2319314666017926e-6),
    (7.4921288639971671e-7, -2.0081508947387920e-6),
    (1.9172560675134308e-7, -5.3127139597205447e-7),
    (4.6922076160992316e-8, -1.3414392979067866e-7),
    (1.0997009755195507e-8, -3.2377254404476023e-8),
    (2.4711684308724898e-9, -7.4806413896589464e-9),
    (5.3302637046174916e-10, -1.6566394593740666e-9),
    (1.1047532552898686e-10, -3.5206336767389236e-10),
    (2.2022745192834016e-11, -7.1876967814515671e-11),
    (4.2262758649603596e-12, -1.4111441246628517e-11),
    (7.8142901839628543e-13, -2.6666799675045314e-12),
    (1.3931846888753608e-13, -4.8547365549853085e-13),
];
