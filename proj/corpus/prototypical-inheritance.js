var Animal = function () { };

Animal.prototype.isAnAnimal = true;

var animal = new Animal();

var Dog = function () {};

Dog.prototype = new Animal();

Dog.prototype.constructor = Dog;

Dog.prototype.isADog = true;

var dog = new Dog();
dog.isAnAnimal; // answers true
dog.isADog; // answers true
