var dog = {};
Object.defineProperty(dog, 'name', {
    enumerable: true,
    configurable: false,
    value: 'Pilou',
    writable: false
});

dog.name; // answers 'Pilou'
dog.name = 'another name';
dog.name; // answers 'Pilou'

delete dog.name;
dog.name; // answers 'Pilou'
