var animal = function (spec) {
  spec = spec || {};
  var that = {};

  that.isAnAnimal = true;

  var name = spec.name || 'unnamed';

  that.getName = function() {
    return name;
  };

  return that;
};

var dog = function (spec) {
  spec = spec || {};
  var that = animal(spec);

  that.isADog = true;

  return that;
};

var aDog = dog({name: 'milou'});
aDog.isAnAnimal; // answers true
aDog.isADog;     // answers true
aDog.getName();  // answers 'milou'
aDog.name;       // answers undefined
