//! Values computed offline with mpmath at 40 significant digits.

#![allow(clippy::excessive_precision)]

pub const LN_GAMMA: &[(f64, f64)] = &[
    (0.001, 6.9071788853838536825),
    (0.37, 0.87694681948487928992),
    (1.5, -0.12078223763524522235),
    (3.25, 0.93580193110872535826),
    (7.9, 8.3242658680088089235),
    (10.5, 13.940625219403763633),
    (100.5, 361.43554046777762156),
    (1234.75, 7552.3304304582896247),
    (1e6, 12815504.56914761166),
];

/// (order, x, sign, ln|J|)
pub const BESSEL_J: &[(f64, f64, i8, f64)] = &[
    (0.0, 0.1, 1, -0.00250156423835216375),
    (0.0, 1.0, 1, -0.2676210647374331123),
    (0.0, 2.5, -1, -3.0285907183886596608),
    (0.0, 5.0, -1, -1.7282396281257005584),
    (0.0, 10.0, -1, -1.4026848972640379179),
    (0.0, 37.0, 1, -4.5224507815672906507),
    (0.0, 50.0, 1, -2.8857605080231659133),
    (0.0, 99.0, -1, -2.9100274364234806388),
    (0.0, 150.0, -1, -7.1638219271156293401),
    (0.0, 301.0, 1, -4.7353053545908564688),
    (0.0, 500.0, -1, -3.378441564012757144),
    (0.0, 1000.0, 1, -3.6974486186587901098),
    (0.0, 5000.0, -1, -5.0132911801240545026),
    (0.0, 10000.0, -1, -4.9482014365147376811),
    (0.5, 0.1, 1, -1.3787511217169709469),
    (0.5, 1.0, 1, -0.39839509891381911088),
    (0.5, 2.5, 1, -1.1973120164995984288),
    (0.5, 5.0, -1, -1.0724534788903635225),
    (0.5, 10.0, -1, -1.9858511252389785769),
    (0.5, 37.0, -1, -2.4720243033725216154),
    (0.5, 50.0, -1, -3.5197839137841785682),
    (0.5, 99.0, -1, -2.5241447582481017241),
    (0.5, 150.0, -1, -3.0667545766105418246),
    (0.5, 301.0, -1, -3.6613744737111865879),
    (0.5, 500.0, -1, -4.0928700992984328336),
    (0.5, 1000.0, 1, -3.8697652450686238309),
    (0.5, 5000.0, -1, -4.4964944990236077617),
    (0.5, 10000.0, -1, -6.0163926773725932191),
    (1.0, 0.1, 1, -2.9969825340792188874),
    (1.0, 1.0, 1, -0.82086559107597686044),
    (1.0, 2.5, 1, -0.69897592983385387158),
    (1.0, 5.0, -1, -1.1160256115967783497),
    (1.0, 10.0, 1, -3.1356210620899707577),
    (1.0, 37.0, -1, -2.0357689165951405925),
    (1.0, 50.0, -1, -2.3277815942319360546),
    (1.0, 99.0, -1, -2.8281362310321887919),
    (1.0, 150.0, -1, -2.7311372121233617493),
    (1.0, 301.0, -1, -3.0982324224429326851),
    (1.0, 500.0, 1, -4.558991670122070367),
    (1.0, 1000.0, 1, -5.3541870308576778865),
    (1.0, 5000.0, -1, -4.6975699765856738908),
    (1.0, 10000.0, 1, -5.6137267785413826219),
    (2.5, 0.1, 1, -8.6910186286454982757),
    (2.5, 1.0, 1, -3.0058470513125558365),
    (2.5, 2.5, 1, -1.1144630157233141888),
    (2.5, 5.0, 1, -1.425545918125758458),
    (2.5, 10.0, 1, -1.6262866405221642229),
    (2.5, 37.0, 1, -2.5758614608131596888),
    (2.5, 50.0, 1, -3.7706441314428214143),
    (2.5, 99.0, 1, -2.525659647541775507),
    (2.5, 150.0, 1, -3.0866473089280352443),
    (2.5, 301.0, 1, -3.6763114419600195673),
    (2.5, 500.0, 1, -4.0816088174473582898),
    (2.5, 1000.0, -1, -3.8677299512878953072),
    (2.5, 5000.0, 1, -4.4965885548193481889),
    (2.5, 10000.0, 1, -6.0154584803832466717),
    (10.0, 0.1, 1, -45.061962583494951983),
    (10.0, 1.0, 1, -22.058633223764529622),
    (10.0, 2.5, 1, -13.015875709392181538),
    (10.0, 5.0, 1, -6.5239887942642077124),
    (10.0, 10.0, 1, -1.5726908975368487434),
    (10.0, 37.0, -1, -2.0206678336909956286),
    (10.0, 50.0, -1, -2.1728923786186138971),
    (10.0, 99.0, 1, -3.9519215603685508123),
    (10.0, 150.0, -1, -3.8818435732337929605),
    (10.0, 301.0, -1, -4.1271705372671269603),
    (10.0, 500.0, 1, -3.352903411896376139),
    (10.0, 1000.0, -1, -3.7082407887077734273),
    (10.0, 5000.0, 1, -5.0271469982420429567),
    (10.0, 10000.0, 1, -4.9456466953496138889),
    (50.5, 0.1, 1, -301.72575718519024971),
    (50.5, 1.0, 1, -185.4500160386659718),
    (50.5, 2.5, 1, -139.20282806479835617),
    (50.5, 5.0, 1, -104.29004678393570299),
    (50.5, 10.0, 1, -69.652323034154526826),
    (50.5, 37.0, 1, -10.251954263329574569),
    (50.5, 50.0, 1, -2.2421311920788606355),
    (50.5, 99.0, 1, -2.6800879544053664004),
    (50.5, 150.0, -1, -2.7033198421466570235),
    (50.5, 301.0, 1, -3.7868075040129325927),
    (50.5, 500.0, 1, -5.6086650300278265633),
    (50.5, 1000.0, -1, -3.9290030958007925031),
    (50.5, 5000.0, 1, -4.5710063254479470254),
    (50.5, 10000.0, 1, -5.6884934152854344339),
    (100.0, 0.1, 1, -663.31262766344084037),
    (100.0, 1.0, 1, -433.05656888911731589),
    (100.0, 2.5, 1, -341.44049189459394541),
    (100.0, 5.0, 1, -272.17220234230760972),
    (100.0, 10.0, 1, -203.04341036709119945),
    (100.0, 37.0, 1, -75.409836156683054311),
    (100.0, 50.0, 1, -48.244601172499851394),
    (100.0, 99.0, 1, -2.5550652643406801852),
    (100.0, 150.0, -1, -4.1760194034048491041),
    (100.0, 301.0, -1, -3.1013431273656937435),
    (100.0, 500.0, 1, -3.3717492790926949022),
    (100.0, 1000.0, 1, -4.4502082632100337864),
    (100.0, 5000.0, 1, -5.5017147010699366787),
    (100.0, 10000.0, -1, -4.8312535152941556748),
    (300.0, 0.1, 1, -2313.6255403169132413),
    (300.0, 1.0, 1, -1622.8508346789777544),
    (300.0, 2.5, 1, -1347.9679756253203063),
    (300.0, 5.0, 1, -1140.0393952163103185),
    (300.0, 10.0, 1, -932.15754411857622586),
    (300.0, 37.0, 1, -540.71382480359447283),
    (300.0, 50.0, 1, -451.32671873931909973),
    (300.0, 99.0, 1, -252.56826580209995822),
    (300.0, 150.0, 1, -138.97924350133565972),
    (300.0, 301.0, 1, -2.5790299276116448114),
    (300.0, 500.0, -1, -5.8245948068941919939),
    (300.0, 1000.0, 1, -7.6674097680489259171),
    (300.0, 5000.0, 1, -4.6244520896035046129),
    (300.0, 10000.0, 1, -5.2862430908177703752),
    (1000.0, 0.1, 1, -8907.8604545396568429),
    (1000.0, 1.0, 1, -6605.2756087983895339),
    (1000.0, 2.5, 1, -5688.9861881142303684),
    (1000.0, 5.0, 1, -4995.8436903897055407),
    (1000.0, 10.0, 1, -4302.7152413903017629),
    (1000.0, 37.0, 1, -2994.6994128562266711),
    (1000.0, 50.0, 1, -2693.8769239393849867),
    (1000.0, 99.0, 1, -2012.6063107730914482),
    (1000.0, 150.0, 1, -1600.2753217351659769),
    (1000.0, 301.0, 1, -921.05623776471422381),
    (1000.0, 500.0, 1, -455.2335650505121686),
    (1000.0, 1000.0, 1, -3.1070958169833460482),
    (1000.0, 5000.0, -1, -4.7838923863129041109),
    (1000.0, 10000.0, -1, -5.0952879341705838348),
];

/// (order, x, ln K)
pub const BESSEL_K: &[(f64, f64, f64)] = &[
    (0.0, 1e-8, 2.919747817422440053),
    (0.0, 0.001, 1.9492885501921987096),
    (0.0, 0.3, 0.31660479419256598848),
    (0.0, 1.0, -0.8650643989067880968),
    (0.0, 2.0, -2.1724882049757099347),
    (0.0, 10.0, -10.93743282303833292),
    (0.0, 55.0, -56.780127686696070362),
    (0.0, 200.0, -202.42399077620448183),
    (0.0, 700.0, -703.04992725894391223),
    (0.0, 2000.0, -2003.5747223615094454),
    (0.5, 1e-8, 9.4361317146209101684),
    (0.5, 0.001, 3.6786689921357959584),
    (0.5, 0.3, 0.52777775480769542867),
    (0.5, 1.0, -0.77420864735527256764),
    (0.5, 2.0, -2.1207822376352452223),
    (0.5, 10.0, -10.92550119385229541),
    (0.5, 55.0, -56.777875239971508027),
    (0.5, 200.0, -202.42336733062929091),
    (0.5, 700.0, -703.0497488148769749),
    (0.5, 2000.0, -2003.5746598771263137),
    (1.0, 1e-8, 18.42068074395236452),
    (1.0, 0.001, 6.9077515171311468738),
    (1.0, 0.3, 1.1171042644479066364),
    (1.0, 1.0, -0.50765194821075233095),
    (1.0, 2.0, -1.9670713025605138915),
    (1.0, 10.0, -10.889730180588070981),
    (1.0, 55.0, -56.771118077867486185),
    (1.0, 200.0, -202.42149699775216829),
    (1.0, 700.0, -703.04921348276688186),
    (1.0, 2000.0, -2003.5744724239808191),
    (2.5, 1e-8, 47.376105501193750787),
    (2.5, 0.001, 18.593791672101540843),
    (2.5, 0.3, 4.3195145943613395024),
    (2.5, 1.0, 1.1717015017000407375),
    (2.5, 2.0, -0.94212724129359910513),
    (2.5, 10.0, -10.640322251618633013),
    (2.5, 55.0, -56.723825417721667848),
    (2.5, 200.0, -202.40840482923977618),
    (2.5, 700.0, -703.04546616180641137),
    (2.5, 2000.0, -2003.5731602521261733),
    (7.0, 1e-8, 139.68289950303633115),
    (7.0, 0.001, 59.092421206578065723),
    (7.0, 0.3, 19.162195330147452655),
    (7.0, 1.0, 10.696638886492273683),
    (7.0, 2.0, 5.7220742150032037154),
    (7.0, 10.0, -8.6678661240184573905),
    (7.0, 55.0, -56.339212765485775718),
    (7.0, 200.0, -202.30180769644978669),
    (7.0, 700.0, -703.01495251075556326),
    (7.0, 2000.0, -2003.5624754348383613),
    (20.5, 1e-8, 431.97182624647322382),
    (20.5, 0.001, 195.95685420176302839),
    (20.5, 0.3, 79.028159673957138722),
    (20.5, 1.0, 54.335054920608340788),
    (20.5, 2.0, 40.087142543560085546),
    (20.5, 10.0, 5.9034411061401526433),
    (20.5, 55.0, -53.034125304418993269),
    (20.5, 200.0, -201.37688167467567633),
    (20.5, 700.0, -702.74998412676734548),
    (20.5, 2000.0, -2003.4696870313561061),
    (60.0, 1e-8, 1330.6703571516281921),
    (60.0, 0.001, 639.89482924917719875),
    (60.0, 0.3, 297.66749941936393587),
    (60.0, 1.0, 225.42527538111645824),
    (60.0, 2.0, 183.82373500386390022),
    (60.0, 10.0, 86.85221080424848455),
    (60.0, 55.0, -26.715043491263643856),
    (60.0, 200.0, -193.51117456736789782),
    (60.0, 700.0, -700.48189678458637739),
    (60.0, 2000.0, -2002.6750146204709701),
];
